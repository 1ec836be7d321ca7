#include "sympindex/json_io.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sympindex/errors.hpp"

namespace sympindex {

namespace {

using Json = nlohmann::ordered_json;

std::string istr(const Int& v) { return v.get_str(); }

/* Exact decimal rendering when the denominator is 2^a 5^b (everything the
 * library produces: parsed decimal literals and dyadic approximations);
 * "p/q" otherwise. The readers accept both spellings. */
std::string number_str(const Rat& a) {
  Int den = a.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return format_rat(a);
  return format_decimal(a, std::max(twos, fives));
}

Rat parse_number(const Json& j, const char* what) {
  if (!j.is_string())
    throw InputError(std::string(what) + " must be a string literal");
  const std::string s = j.get<std::string>();
  return s.find('/') != std::string::npos ? parse_rat(s) : parse_decimal(s);
}

std::int64_t get_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw InputError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Json parse_document(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON document");
  return j;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Json angle_to_json(const Angle& a) {
  Json j;
  if (a.is_rational()) {
    const Rat& v = a.rat();
    j["rat"] = Json::array({to_i64(v.get_num()), to_i64(v.get_den())});
  } else {
    Json irr;
    irr["approx"] = number_str(a.approx());
    irr["gap"] = number_str(a.gap());
    j["irr"] = irr;
  }
  return j;
}

Angle angle_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("angle must be an object");
  if (j.contains("rat")) {
    const Json& r = j.at("rat");
    if (!r.is_array() || r.size() != 2)
      throw InputError("angle \"rat\" must be [p, q]");
    Rat v(Int(get_int(r[0], "angle numerator")),
          Int(get_int(r[1], "angle denominator")));
    if (v.get_den() == 0) throw InputError("angle denominator is zero");
    v.canonicalize();
    return Angle::rational(v);
  }
  if (j.contains("irr")) {
    const Json& irr = j.at("irr");
    return Angle::irrational_exactish(parse_number(field(irr, "approx"), "approx"),
                                      parse_number(field(irr, "gap"), "gap"));
  }
  throw InputError("angle needs a \"rat\" or \"irr\" member");
}

Json block_to_json(const NormalFormBlock& b) {
  Json j;
  j["kind"] = b.kind == BlockKind::Hyp2k ? "Hyp" : block_kind_name(b.kind);
  if (b.has_angle()) j["angle"] = angle_to_json(b.ang());
  if (b.kind == BlockKind::Hyp2k) j["k"] = b.k;
  if (b.B) {
    Json rows = Json::array();
    for (const Rat& e : *b.B) rows.push_back(format_rat(e));
    j["b"] = rows;
  }
  return j;
}

NormalFormBlock block_from_json(const Json& j) {
  const Json& kj = field(j, "kind");
  if (!kj.is_string()) throw InputError("block \"kind\" must be a string");
  std::string name = kj.get<std::string>();
  if (name == "Hyp") name = "Hyp2k";
  NormalFormBlock b;
  b.kind = block_kind_from_name(name);
  if (j.contains("angle")) b.angle = angle_from_json(j.at("angle"));
  if (j.contains("k")) b.k = static_cast<int>(get_int(j.at("k"), "block \"k\""));
  if (j.contains("b")) {
    const Json& rows = j.at("b");
    if (!rows.is_array() || rows.size() != 4)
      throw InputError("block \"b\" must hold four entries");
    std::array<Rat, 4> bm;
    for (int i = 0; i < 4; ++i) bm[i] = parse_number(rows[i], "block \"b\" entry");
    b.B = bm;
  }
  b.validate();
  return b;
}

Json decomposition_to_jobj(const NormalFormDecomposition& dec) {
  Json j;
  j["d"] = dec.d();
  Json blocks = Json::array();
  for (const auto& b : dec.blocks) blocks.push_back(block_to_json(b));
  j["blocks"] = blocks;
  return j;
}

NormalFormDecomposition decomposition_from_jobj(const Json& j) {
  NormalFormDecomposition dec;
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw InputError("\"blocks\" must be an array");
  for (const Json& bj : blocks) dec.blocks.push_back(block_from_json(bj));
  if (dec.d() != get_int(field(j, "d"), "\"d\""))
    throw InputError("\"d\" disagrees with the blocks");
  dec.validate();
  return dec;
}

Json profile_to_jobj(const IndexProfile& p) {
  Json j;
  j["decomposition"] = decomposition_to_jobj(p.dec);
  j["base_index"] = to_i64(p.base_index);
  return j;
}

IndexProfile profile_from_jobj(const Json& j) {
  IndexProfile p;
  p.dec = decomposition_from_jobj(field(j, "decomposition"));
  p.base_index = get_int(field(j, "base_index"), "\"base_index\"");
  return p;
}

Json tuple_to_jobj(const JumpTuple& t) {
  Json j;
  j["N"] = to_i64(t.N);
  Json ms = Json::array();
  for (const Int& m : t.m) ms.push_back(to_i64(m));
  j["m"] = ms;
  j["chi"] = t.chi;
  Json ds = Json::array();
  for (const Int& d : t.delta_list) ds.push_back(to_i64(d));
  j["delta_i"] = ds;
  j["epsilon"] = format_rat(t.epsilon);
  return j;
}

JumpTuple tuple_from_jobj(const Json& j) {
  JumpTuple t;
  t.N = get_int(field(j, "N"), "\"N\"");
  for (const Json& v : field(j, "m")) t.m.push_back(Int(get_int(v, "\"m\" entry")));
  for (const Json& v : field(j, "chi")) {
    auto c = get_int(v, "\"chi\" entry");
    if (c != 0 && c != 1) throw InputError("\"chi\" entries must be 0 or 1");
    t.chi.push_back(static_cast<int>(c));
  }
  for (const Json& v : field(j, "delta_i"))
    t.delta_list.push_back(Int(get_int(v, "\"delta_i\" entry")));
  t.epsilon = parse_number(field(j, "epsilon"), "\"epsilon\"");
  if (t.m.size() != t.chi.size() || t.m.size() != t.delta_list.size())
    throw InputError("\"m\", \"chi\" and \"delta_i\" must have equal length");
  return t;
}

Json table_to_jobj(const LocalHomologyTable& t) {
  Json j = Json::object();
  for (const auto& [iterate, row] : t.dims) {
    Json r = Json::object();
    for (const auto& [degree, dim] : row) r[istr(degree)] = to_i64(dim);
    j[istr(iterate)] = r;
  }
  return j;
}

Int parse_key(const std::string& s, const char* what) {
  try {
    return Int(s, 10);
  } catch (const std::invalid_argument&) {
    throw InputError(std::string(what) + " key \"" + s + "\" is not an integer");
  }
}

LocalHomologyTable table_from_jobj(const Json& j) {
  LocalHomologyTable t;
  for (const auto& [k, row] : j.items()) {
    Int iterate = parse_key(k, "local homology iterate");
    if (!row.is_object())
      throw InputError("local homology rows must map degree to dimension");
    for (const auto& [deg, dim] : row.items())
      t.dims[iterate][parse_key(deg, "local homology degree")] =
          static_cast<int>(get_int(dim, "local homology dimension"));
  }
  return t;
}

Json orbit_to_jobj(const OrbitDescriptor& x) {
  Json j;
  j["label"] = x.label;
  j["action"] = number_str(x.action);
  j["profile"] = profile_to_jobj(x.profile);
  j["local_homology"] = x.table ? table_to_jobj(*x.table) : Json("nondegenerate");
  return j;
}

OrbitDescriptor orbit_from_jobj(const Json& j) {
  OrbitDescriptor x;
  const Json& lj = field(j, "label");
  if (!lj.is_string()) throw InputError("orbit \"label\" must be a string");
  x.label = lj.get<std::string>();
  x.action = parse_number(field(j, "action"), "\"action\"");
  x.profile = profile_from_jobj(field(j, "profile"));
  const Json& lh = field(j, "local_homology");
  if (lh.is_string()) {
    if (lh.get<std::string>() != "nondegenerate")
      throw InputError("\"local_homology\" must be \"nondegenerate\" or a table");
  } else if (lh.is_object()) {
    x.table = table_from_jobj(lh);
  } else {
    throw InputError("\"local_homology\" must be \"nondegenerate\" or a table");
  }
  return x;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json approx_to_jobj(const ApproxRat& a) {
  if (a.exact()) return Json(format_rat(a.val));
  Json j;
  j["approx"] = number_str(a.val);
  j["err"] = number_str(a.err);
  return j;
}

}  // namespace

std::string decomposition_to_json(const NormalFormDecomposition& dec) {
  return dump(decomposition_to_jobj(dec));
}

NormalFormDecomposition decomposition_from_json(const std::string& text) {
  return decomposition_from_jobj(parse_document(text));
}

std::string matrix_to_json(const SymplecticMatrix& m) {
  Json j;
  j["d"] = m.d();
  Json rows = Json::array();
  for (int i = 0; i < m.M.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.M.cols(); ++c) row.push_back(format_rat(m.M.at(i, c)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return dump(j);
}

SymplecticMatrix matrix_from_json(const std::string& text) {
  Json j = parse_document(text);
  auto d = get_int(field(j, "d"), "\"d\"");
  if (d < 1) throw InputError("matrix \"d\" must be positive");
  const Json& rows = field(j, "entries");
  int n = static_cast<int>(2 * d);
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw InputError("matrix needs 2d rows");
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InputError("matrix rows need 2d entries");
    for (int c = 0; c < n; ++c) m.at(i, c) = parse_number(row[c], "matrix entry");
  }
  SymplecticMatrix sm{std::move(m)};
  sm.validate();
  return sm;
}

std::string profile_to_json(const IndexProfile& p) {
  return dump(profile_to_jobj(p));
}

IndexProfile profile_from_json(const std::string& text) {
  return profile_from_jobj(parse_document(text));
}

std::string profiles_to_json(const std::vector<IndexProfile>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(profile_to_jobj(p));
  return dump(arr);
}

std::vector<IndexProfile> profiles_from_json(const std::string& text) {
  Json j = parse_document(text);
  std::vector<IndexProfile> out;
  if (j.is_object() && j.contains("orbits")) {
    for (const Json& oj : field(j, "orbits"))
      out.push_back(profile_from_jobj(field(oj, "profile")));
    return out;
  }
  if (j.is_object()) {
    out.push_back(profile_from_jobj(j));
    return out;
  }
  if (!j.is_array()) throw InputError("expected a profile or an array of them");
  for (const Json& pj : j)
    out.push_back(pj.is_object() && pj.contains("profile")
                      ? profile_from_jobj(field(pj, "profile"))
                      : profile_from_jobj(pj));
  return out;
}

std::string tuple_to_json(const JumpTuple& t) { return dump(tuple_to_jobj(t)); }

std::string tuples_to_json(const std::vector<JumpTuple>& ts) {
  Json arr = Json::array();
  for (const auto& t : ts) arr.push_back(tuple_to_jobj(t));
  return dump(arr);
}

std::vector<JumpTuple> tuples_from_json(const std::string& text) {
  Json j = parse_document(text);
  std::vector<JumpTuple> out;
  if (j.is_object()) {
    out.push_back(tuple_from_jobj(j));
    return out;
  }
  if (!j.is_array()) throw InputError("expected a tuple or an array of them");
  for (const Json& tj : j) out.push_back(tuple_from_jobj(tj));
  return out;
}

void bind_tuple_to_profiles(JumpTuple& t,
                            const std::vector<IndexProfile>& profiles) {
  t.M_common = build_v_vector(profiles).M_common;
  t.M0.reset();
}

std::string config_to_json(const Configuration& c) {
  Json j;
  j["n"] = c.ambient_n;
  Json orbits = Json::array();
  for (const auto& x : c.orbits) orbits.push_back(orbit_to_jobj(x));
  j["orbits"] = orbits;
  return dump(j);
}

Configuration config_from_json(const std::string& text) {
  Json j = parse_document(text);
  Configuration c;
  c.ambient_n = static_cast<int>(get_int(field(j, "n"), "\"n\""));
  const Json& orbits = field(j, "orbits");
  if (!orbits.is_array()) throw InputError("\"orbits\" must be an array");
  for (const Json& oj : orbits) c.orbits.push_back(orbit_from_jobj(oj));
  c.validate();
  return c;
}

std::string iterate_record_to_json(const IndexProfile& p, const Int& m) {
  Json j;
  j["m"] = to_i64(m);
  j["mu_minus"] = to_i64(mu_minus_iter(p, m));
  j["mu_plus"] = to_i64(mu_plus_iter(p, m));
  j["nu"] = to_i64(nu_iter(p, m));
  ApproxRat mean = mean_index(p);
  j["mean"] = mean.exact() ? Json(format_rat(mean.val))
                           : Json(number_str(mean.val));
  return dump(j);
}

std::string mean_record_to_json(const IndexProfile& p) {
  ApproxRat mean = mean_index(p);
  Json j;
  j["exact"] = mean.exact();
  j["mean"] = mean.exact() ? Json(format_rat(mean.val))
                           : Json(number_str(mean.val));
  if (!mean.exact()) j["err"] = number_str(mean.err);
  return dump(j);
}

std::string identity_report_to_json(const IdentityReport& r) {
  Json j;
  j["ok"] = r.ok();
  Json per = Json::array();
  for (const auto& p : r.per_profile) {
    Json e;
    e["nu_plus_one_ok"] = p.nu_plus_one_ok;
    e["nu_minus_one_ok"] = p.nu_minus_one_ok;
    e["mu_odd_up_ok"] = p.mu_odd_up_ok;
    e["mu_odd_down_ok"] = p.mu_odd_down_ok;
    e["mu_even_ok"] = p.mu_even_ok;
    e["windows_ok"] = p.windows_ok;
    e["m_formula_ok"] = p.m_formula_ok;
    e["delta"] = to_i64(p.delta_recomputed);
    per.push_back(e);
  }
  j["per_profile"] = per;
  j["m0_divides"] = r.m0_divides;
  j["delta_matches_stored"] = r.delta_matches_stored;
  j["failures"] = r.failures();
  return dump(j);
}

std::string verdict_to_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["orbit_lower_bound"] = to_i64(v.orbit_lower_bound);
  j["evidence"] = v.evidence;
  return dump(j);
}

std::string ellipticity_report_to_json(const EllipticityReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["failure"] = r.failure;
  j["first"] = r.first_label;
  j["second"] = r.second_label;
  Json chains = Json::array();
  for (const auto& c : r.chains) {
    Json e;
    e["label"] = c.label;
    e["attained"] = c.attained;
    e["partition_ok"] = c.partition_ok;
    e["window_sum"] = to_i64(c.window_sum);
    e["cowindow_sum"] = to_i64(c.cowindow_sum);
    e["window_nullity"] = to_i64(c.window_nullity);
    e["rot_like_count"] = to_i64(c.rot_like_count);
    e["equality"] = c.equality;
    e["strict_windows"] = c.strict_windows;
    e["irrationally_elliptic"] = c.irrationally_elliptic;
    e["failure"] = c.failure;
    chains.push_back(e);
  }
  j["chains"] = chains;
  j["notes"] = r.notes;
  return dump(j);
}

std::string morse_report_to_json(const MorseReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["m_top"] = to_i64(r.m_top);
  Json c = Json::object();
  for (const auto& [deg, cnt] : r.c) c[istr(deg)] = to_i64(cnt);
  j["generators"] = c;
  Json v = Json::array();
  for (const Int& d : r.violated_degrees) v.push_back(to_i64(d));
  j["violated_degrees"] = v;
  return dump(j);
}

std::string mean_identity_to_json(const MeanIdentityReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["exact"] = r.exact;
  j["residual"] = approx_to_jobj(r.residual);
  j["tolerance"] = format_rat(r.tolerance);
  return dump(j);
}

std::string betti_table_to_json(int n, const Int& k_top) {
  Json j;
  j["n"] = n;
  Json rows = Json::object();
  for (Int k = n - 1; k <= k_top; ++k) rows[istr(k)] = to_i64(betti(n, k));
  j["betti"] = rows;
  j["alternating_sum"] = to_i64(betti_alternating_sum(n, k_top));
  j["chi_plus"] = format_rat(chi_plus(n));
  return dump(j);
}

std::string convexity_to_json(const ConvexityVerdict& v) {
  Json j;
  j["pass"] = v.pass;
  j["m_star"] = to_i64(v.m_star);
  if (v.violating_m) j["violating_m"] = to_i64(*v.violating_m);
  j["reason"] = v.reason;
  return dump(j);
}

}  // namespace sympindex
