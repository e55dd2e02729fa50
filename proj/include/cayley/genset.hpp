#pragma once

#include <string>
#include <vector>

namespace cayley {

// An indexed symmetric generating set. Higher layers refer to generators by
// index only; inverse_pairing[i] is the index of generator i's inverse
// (i itself for involutions).
struct GeneratorSet {
    std::vector<std::string> labels;
    std::vector<int> inverse_pairing;

    int size() const { return static_cast<int>(labels.size()); }
    int inverse_index(int i) const { return inverse_pairing[i]; }
};

// Structural validation: labels nonempty, pairing a bijective involution on
// indices. Throws EmptyGenset / NotInvolution. Identity exclusion and the
// multiply(g_i, g_{pair(i)}) == e check need the oracle's arithmetic and are
// performed by validate_oracle_genset (group.hpp).
GeneratorSet validate_genset(std::vector<std::string> labels, std::vector<int> pairing);

// Builds the standard layout for letter generators: labels x1..xn followed by
// their inverses "x^-1", pairing i <-> i+n.
GeneratorSet letters_genset(const std::vector<std::string>& positive_labels);

} // namespace cayley
