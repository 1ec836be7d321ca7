#pragma once

#include <string>
#include <vector>

#include "sympindex/reeb_count.hpp"

namespace sympindex {

/* Demonstration configurations whose parameters are found by search, not
 * written down.  katok_like_n3 walks a two-orbit grid (second base index,
 * then a coarse step for the first orbit's angle-sum defect) and returns
 * the first candidate that passes dynamical convexity, the mean-index
 * identity, the Morse ladder to degree FIXTURE_MORSE_TOP, and the three
 * window-pattern tuple scans below FIXTURE_SCAN_NMAX.  sdm_forcing_n3
 * scans base indices for a fully degenerate two-block orbit until the
 * counting replay returns FORCED_INFINITELY_MANY. */

extern const Int FIXTURE_SCAN_NMAX;
extern const Int FIXTURE_MORSE_TOP;

Configuration katok_like_n3();
Configuration sdm_forcing_n3();
Configuration empty_n3();

struct NamedFixture {
  std::string name;
  Configuration cfg;
};

/* katok-like-n3, sdm-forcing-n3, empty: the set shipped under fixtures/. */
std::vector<NamedFixture> builtin_fixtures();

}  // namespace sympindex
