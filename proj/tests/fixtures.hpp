#pragma once

#include "ppart/baranyai.hpp"

namespace ppart::testing {

/// A hand-entered n = 8 schedule, 35 rows, from an external source.
inline Schedule reference_n8_table() {
  Schedule s;
  s.n = 8;
  s.rounds = {
      {{7, 5, 3, 0}, {6, 4, 2, 1}},
      {{6, 5, 3, 0}, {7, 4, 2, 1}},
      {{7, 6, 3, 0}, {5, 4, 2, 1}},
      {{7, 4, 3, 0}, {6, 5, 2, 1}},
      {{7, 5, 4, 0}, {6, 3, 2, 1}},
      {{6, 4, 3, 0}, {7, 5, 2, 1}},
      {{6, 5, 4, 0}, {7, 3, 2, 1}},
      {{7, 6, 4, 0}, {5, 3, 2, 1}},
      {{5, 4, 3, 0}, {7, 6, 2, 1}},
      {{7, 6, 5, 0}, {4, 3, 2, 1}},
      {{7, 5, 1, 0}, {6, 4, 3, 2}},
      {{7, 5, 2, 0}, {6, 4, 3, 1}},
      {{6, 5, 1, 0}, {7, 4, 3, 2}},
      {{6, 5, 2, 0}, {7, 4, 3, 1}},
      {{7, 6, 1, 0}, {5, 4, 3, 2}},
      {{7, 4, 1, 0}, {6, 5, 3, 2}},
      {{7, 6, 2, 0}, {5, 4, 3, 1}},
      {{7, 3, 1, 0}, {6, 5, 4, 2}},
      {{7, 4, 2, 0}, {6, 5, 3, 1}},
      {{6, 4, 1, 0}, {7, 5, 3, 2}},
      {{6, 3, 1, 0}, {7, 5, 4, 2}},
      {{7, 3, 2, 0}, {6, 5, 4, 1}},
      {{5, 3, 1, 0}, {7, 6, 4, 2}},
      {{6, 4, 2, 0}, {7, 5, 3, 1}},
      {{5, 4, 1, 0}, {7, 6, 3, 2}},
      {{4, 3, 1, 0}, {7, 6, 5, 2}},
      {{6, 3, 2, 0}, {7, 5, 4, 1}},
      {{7, 2, 1, 0}, {6, 5, 4, 3}},
      {{5, 3, 2, 0}, {7, 6, 4, 1}},
      {{6, 2, 1, 0}, {7, 5, 4, 3}},
      {{5, 2, 1, 0}, {7, 6, 4, 3}},
      {{5, 4, 2, 0}, {7, 6, 3, 1}},
      {{4, 2, 1, 0}, {7, 6, 5, 3}},
      {{4, 3, 2, 0}, {7, 6, 5, 1}},
      {{3, 2, 1, 0}, {7, 6, 5, 4}},
  };
  return s;
}

}  // namespace ppart::testing
