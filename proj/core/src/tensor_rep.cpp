#include "qkoszul/tensor_rep.hpp"

#include "qkoszul/errors.hpp"

namespace qkoszul {

namespace {

// <eps_t, alpha_i^vee>
int simple_coweight(int t, int i) { return (t == i) - (t == i + 1); }

}  // namespace

std::string Generator::to_string() const {
    switch (kind) {
        case Kind::E: return "e" + std::to_string(index);
        case Kind::F: return "f" + std::to_string(index);
        case Kind::K: return "k" + std::to_string(index) + (sign < 0 ? "^-1" : "");
    }
    return {};
}

std::vector<Generator> all_generators(int n) {
    std::vector<Generator> out;
    for (int i = 1; i < n; ++i) out.push_back(Generator::e(i));
    for (int i = 1; i < n; ++i) out.push_back(Generator::f(i));
    for (int r = 1; r <= n; ++r) {
        out.push_back(Generator::k(r, 1));
        out.push_back(Generator::k(r, -1));
    }
    return out;
}

std::vector<std::pair<Tensor, Scalar>> apply_generator(const Generator& g, const Tensor& t, int n, Field field) {
    std::vector<std::pair<Tensor, Scalar>> out;
    const std::size_t d = t.size();
    switch (g.kind) {
        case Generator::Kind::K: {
            if (g.index < 1 || g.index > n) throw PreconditionError("k index out of range");
            int e = 0;
            for (int x : t) e += x == g.index;
            out.emplace_back(t, field.zeta_pow(g.sign * e));
            break;
        }
        case Generator::Kind::E: {
            const int i = g.index;
            if (i < 1 || i >= n) throw PreconditionError("e index out of range");
            int before = 0;  // exponent of the k_i's standing on earlier factors
            for (std::size_t p = 0; p < d; ++p) {
                if (t[p] == i + 1) {
                    Tensor u = t;
                    u[p] = i;
                    out.emplace_back(std::move(u), field.zeta_pow(before));
                }
                before += simple_coweight(t[p], i);
            }
            break;
        }
        case Generator::Kind::F: {
            const int i = g.index;
            if (i < 1 || i >= n) throw PreconditionError("f index out of range");
            int after = 0;  // exponent of the k_i^-1's standing on later factors
            for (std::size_t p = d; p-- > 0;) {
                if (t[p] == i) {
                    Tensor u = t;
                    u[p] = i + 1;
                    out.emplace_back(std::move(u), field.zeta_pow(-after));
                }
                after += simple_coweight(t[p], i);
            }
            break;
        }
    }
    return out;
}

std::vector<Tensor> tensor_basis(int n, int d) {
    std::vector<Tensor> out;
    Tensor t(static_cast<std::size_t>(d), 1);
    while (true) {
        out.push_back(t);
        int p = d - 1;
        while (p >= 0 && t[static_cast<std::size_t>(p)] == n) t[static_cast<std::size_t>(p--)] = 1;
        if (p < 0) break;
        ++t[static_cast<std::size_t>(p)];
    }
    return out;
}

std::size_t tensor_index(const Tensor& t, int n) {
    std::size_t idx = 0;
    for (int x : t) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(x - 1);
    return idx;
}

SparseMatrix generator_matrix(const Generator& g, int n, int d, Field field) {
    const auto basis = tensor_basis(n, d);
    SparseMatrix m(basis.size(), basis.size(), field);
    for (std::size_t col = 0; col < basis.size(); ++col)
        for (const auto& [u, c] : apply_generator(g, basis[col], n, field)) m.add(tensor_index(u, n), col, c);
    return m;
}

}  // namespace qkoszul
