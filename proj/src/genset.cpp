#include "cayley/genset.hpp"

#include "cayley/errors.hpp"

#include <set>

namespace cayley {

GeneratorSet validate_genset(std::vector<std::string> labels, std::vector<int> pairing) {
    if (labels.empty()) {
        throw EmptyGenset("generating set is empty");
    }
    if (pairing.size() != labels.size()) {
        throw NotInvolution("pairing size does not match label count");
    }
    const int n = static_cast<int>(labels.size());
    for (int i = 0; i < n; ++i) {
        int j = pairing[i];
        if (j < 0 || j >= n) {
            throw NotInvolution("pairing index out of range: " + std::to_string(j));
        }
        if (pairing[j] != i) {
            throw NotInvolution("pairing is not an involution at index " + std::to_string(i));
        }
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n) {
        throw NotInvolution("duplicate generator labels");
    }
    return GeneratorSet{std::move(labels), std::move(pairing)};
}

GeneratorSet letters_genset(const std::vector<std::string>& positive_labels) {
    std::vector<std::string> labels = positive_labels;
    const int n = static_cast<int>(positive_labels.size());
    for (const auto& l : positive_labels) {
        labels.push_back(l + "^-1");
    }
    std::vector<int> pairing(2 * n);
    for (int i = 0; i < n; ++i) {
        pairing[i] = i + n;
        pairing[i + n] = i;
    }
    return validate_genset(std::move(labels), std::move(pairing));
}

} // namespace cayley
