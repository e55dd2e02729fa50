#pragma once

#include "cayley/element.hpp"
#include "cayley/genset.hpp"

#include <string>
#include <vector>

namespace cayley::detail {

// a, b, c, ... for small ranks, x1, x2, ... beyond 26.
std::vector<std::string> default_letter_labels(int n);

// Renders a signed-letter word (+k / -k for generator k-1) against labels.
std::string format_letter_word(const std::vector<Coord>& letters,
                               const std::vector<std::string>& labels);

// Free reduction of b appended onto a (letters are signed, x * -x cancels).
void append_reduced(std::vector<Coord>& acc, const std::vector<Coord>& tail);

} // namespace cayley::detail
