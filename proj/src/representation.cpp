#include "regorb/representation.hpp"

#include <stdexcept>

namespace regorb {

std::uint32_t Representation::scalar_lambda() const {
    if (group.scalar_order <= 1) return 1;
    return generators.back()(0, 0);
}

BigInt Representation::space_size() const {
    BigInt r = 1;
    for (std::size_t i = 0; i < dim; ++i) r *= p;
    return r;
}

FpMatrix evaluate_word(const Representation& v, const std::vector<int>& word) {
    FpMatrix m = FpMatrix::identity(v.dim, v.p);
    for (int i : word) {
        if (i < 0 || static_cast<std::size_t>(i) >= v.generators.size())
            throw std::out_of_range("generator index out of range");
        m = m * v.generators[i];
    }
    return m;
}

FpMatrix evaluate_permutation(const Representation& v, const Permutation& g) {
    const int n = v.group.n;
    if (g.degree() != n) throw std::invalid_argument("permutation degree does not match the group");
    auto word = coxeter_word(g);
    FpMatrix m = FpMatrix::identity(v.dim, v.p);
    if (v.group.kind == GroupKind::Sn) {
        for (int i : word) m = m * v.generators[i];
        return m;
    }
    if (v.group.kind != GroupKind::An) throw std::invalid_argument("permutation evaluation needs S_n or A_n");
    if (word.size() % 2) throw std::invalid_argument("odd permutation is not in A_n");
    // s_a s_b = t_a ... t_{b-1} for a < b, and the inverse word for a > b.
    std::vector<FpMatrix> inv(v.h_generator_count());
    std::vector<bool> have(inv.size(), false);
    auto tinv = [&](int i) -> const FpMatrix& {
        if (!have[i]) {
            inv[i] = v.generators[i] * v.generators[i];
            have[i] = true;
        }
        return inv[i];
    };
    for (std::size_t k = 0; k < word.size(); k += 2) {
        int a = word[k], b = word[k + 1];
        if (a < b) {
            for (int i = a; i < b; ++i) m = m * v.generators[i];
        } else if (a > b) {
            for (int i = a - 1; i >= b; --i) m = m * tinv(i);
        }
    }
    return m;
}

}  // namespace regorb
