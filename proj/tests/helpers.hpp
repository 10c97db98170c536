#pragma once

#include "liederiv/gma.hpp"
#include "liederiv/library.hpp"
#include "liederiv/workspace.hpp"

#include <array>
#include <random>

namespace testing {

using namespace liederiv;

inline Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline Matrix rows(const Field& f, std::initializer_list<std::initializer_list<long>> rs) {
    std::vector<Vec> out;
    std::size_t cols = 0;
    for (auto r : rs) {
        out.push_back(f.reduce(vec(r)));
        cols = r.size();
    }
    return Matrix::from_rows(f, cols, out);
}

inline Matrix random_matrix(std::mt19937_64& rng, const Field& f, std::size_t r, std::size_t c) {
    Matrix m(f, r, c);
    std::uniform_int_distribution<long> d(-4, 4);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, f.reduce(Scalar(d(rng))));
    return m;
}

inline const NamedContext& only_context(const Workspace& ws) { return ws.contexts.front(); }

inline GMAlgebra example_gma(const std::string& name) {
    return GMAlgebra(load_example(name).contexts.front().context);
}

// Block multiplication written out independently of the library:
// (a,m,n,b)(a',m',n',b') = (aa' + mn', am' + mb', na' + bn', nm' + bb').
inline Vec block_structure(const MoritaContext& c) {
    const Field& f = c.field();
    const std::size_t da = c.A->dim(), dm = c.M.dim(), dn = c.N.dim(), db = c.B->dim();
    const std::size_t d = da + dm + dn + db;
    Vec s(d * d * d, Scalar(0));
    auto split = [&](std::size_t i) {
        Vec a = f.zeros(da), m = f.zeros(dm), n = f.zeros(dn), b = f.zeros(db);
        if (i < da) a[i] = 1;
        else if (i < da + dm) m[i - da] = 1;
        else if (i < da + dm + dn) n[i - da - dm] = 1;
        else b[i - da - dm - dn] = 1;
        return std::array<Vec, 4>{a, m, n, b};
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto x = split(i), y = split(j);
            Vec a = add(c.A->multiply(x[0], y[0]), c.pair_mn(x[1], y[2]));
            Vec m = add(c.M.act_left(x[0], y[1]), c.M.act_right(x[1], y[3]));
            Vec n = add(c.N.act_left(x[3], y[2]), c.N.act_right(x[2], y[0]));
            Vec b = add(c.pair_nm(x[2], y[1]), c.B->multiply(x[3], y[3]));
            Vec all;
            for (auto* part : {&a, &m, &n, &b})
                all.insert(all.end(), part->begin(), part->end());
            for (std::size_t k = 0; k < d; ++k)
                s[(i * d + j) * d + k] = f.reduce(all[k]);
        }
    return s;
}

inline Vec block_unit(const MoritaContext& c) {
    Vec u = c.A->unit();
    u.resize(c.A->dim() + c.M.dim() + c.N.dim(), Scalar(0));
    for (const auto& x : c.B->unit())
        u.push_back(x);
    return u;
}

} // namespace testing
