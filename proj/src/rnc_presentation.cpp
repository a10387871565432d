#include "conedef/rnc_presentation.hpp"

#include "conedef/errors.hpp"
#include "conedef/p1_cech.hpp"

#include <stdexcept>
#include <string>

namespace conedef::rnc {

namespace {

void check_d(int d) {
    if (d < 2) throw std::invalid_argument("presentation needs d >= 2, got " + std::to_string(d));
}

std::int64_t as_count(std::size_t v) { return static_cast<std::int64_t>(v); }

std::size_t width(int deg) { return deg < 0 ? 0 : static_cast<std::size_t>(deg) + 1; }

Polynomial binary_monomial(int a, int b) { return Polynomial::monomial({a, b}); }

// Jacobian entries pushed to Q[x0, x1], indexed [k][i].
std::vector<std::vector<Polynomial>> binary_jacobian(const HankelPresentation& p) {
    const PolyMatrix j = jacobian_matrix(p);
    std::vector<std::vector<Polynomial>> out(j.rows);
    for (std::size_t k = 0; k < j.rows; ++k)
        for (std::size_t i = 0; i < j.cols; ++i) out[k].push_back(to_binary(p.d, j(k, i)));
    return out;
}

// Image sum_i J_ki v_i in the free module, concatenated over k in target degree deg.
std::vector<Rational> apply_jacobian(const std::vector<std::vector<Polynomial>>& jb, const std::vector<Polynomial>& v,
                                     int deg) {
    std::vector<Rational> out;
    for (const auto& row : jb) {
        Polynomial phi(2);
        for (std::size_t i = 0; i < row.size(); ++i) phi += row[i] * v[i];
        if (!phi.is_polynomial()) throw ConsistencyError("normal component of a lifted section is not a polynomial");
        const auto block = binary_coordinates(phi, deg);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

}  // namespace

HankelPresentation build_presentation(int d) {
    check_d(d);
    HankelPresentation p;
    p.d = d;
    const std::size_t nv = p.nvars();
    auto z = [nv](int i) { return Polynomial::variable(nv, static_cast<std::size_t>(i)); };
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            p.labels.emplace_back(i, j);
            p.generators.push_back(z(i) * z(j + 1) - z(i + 1) * z(j));
        }
    return p;
}

PolyMatrix jacobian_matrix(const HankelPresentation& p) {
    PolyMatrix j;
    j.rows = p.generators.size();
    j.cols = p.nvars();
    for (const auto& q : p.generators)
        for (std::size_t i = 0; i < j.cols; ++i) j.entries.push_back(q.derivative(i));
    return j;
}

GradedSBasis s_basis(int d, int k) {
    check_d(d);
    GradedSBasis b{d, k, {}};
    for (int t = 0; t <= d * k; ++t) b.monomials.push_back({d * k - t, t});
    return b;
}

Polynomial to_binary(int d, const Polynomial& p) {
    if (p.nvars() != static_cast<std::size_t>(d + 1)) throw std::invalid_argument("polynomial is not in z_0..z_d");
    std::vector<Polynomial> images;
    for (int i = 0; i <= d; ++i) images.push_back(binary_monomial(d - i, i));
    return p.substitute(images);
}

std::vector<Rational> binary_coordinates(const Polynomial& form, int deg) {
    if (form.nvars() != 2) throw std::invalid_argument("binary form expected");
    std::vector<Rational> v(width(deg));
    for (const auto& [e, c] : form.terms()) {
        if (e[0] < 0 || e[1] < 0 || e[0] + e[1] != deg)
            throw std::invalid_argument("term outside the binary forms of degree " + std::to_string(deg));
        v[static_cast<std::size_t>(e[1])] = c;
    }
    return v;
}

std::map<int, std::vector<Rational>> normal_form(int d, const Polynomial& p) {
    check_d(d);
    std::map<int, Polynomial> by_grade;
    for (const auto& [e, c] : p.terms()) {
        int k = 0;
        for (int x : e) k += x;
        by_grade.try_emplace(k, p.nvars()).first->second.add_term(e, c);
    }
    std::map<int, std::vector<Rational>> out;
    for (const auto& [k, part] : by_grade) out[k] = binary_coordinates(to_binary(d, part), d * k);
    return out;
}

linalg::RationalMatrix graded_jacobian_map(int d, int m) {
    const HankelPresentation p = build_presentation(d);
    const auto jb = binary_jacobian(p);
    const int src_deg = d * (m + 1), tgt_deg = d * (m + 2);
    const std::size_t rows = p.generators.size() * width(tgt_deg);
    std::vector<std::vector<Rational>> columns;
    for (int i = 0; i <= d; ++i)
        for (std::size_t t = 0; t < width(src_deg); ++t) {
            std::vector<Polynomial> v(p.nvars(), Polynomial(2));
            v[static_cast<std::size_t>(i)] = binary_monomial(src_deg - static_cast<int>(t), static_cast<int>(t));
            columns.push_back(apply_jacobian(jb, v, tgt_deg));
        }
    return linalg::RationalMatrix::from_columns(rows, columns);
}

std::int64_t normal_bundle_h0(int d, int m) {
    check_d(d);
    return (d - 1) * cech::h_dim(0, d + 2 + d * m);
}

NormalRoute t1_via_normal(int d, int m) {
    check_d(d);
    NormalRoute r;
    r.normal_h0 = normal_bundle_h0(d, m);
    r.euler_h0 = cech::euler_restricted_h0(d, m);
    r.tangent_h0 = cech::h_dim(0, 2 + d * m);
    r.euler_h1 = cech::euler_restricted_h1(d, m);
    r.exact = r.euler_h1 == 0;
    r.t1 = r.normal_h0 - r.euler_h0 + r.tangent_h0;
    return r;
}

std::vector<linalg::RationalMatrix> linear_syzygies(const HankelPresentation& p) {
    const std::size_t nv = p.nvars(), ngen = p.generators.size();
    // Columns: z_i * q_k for (k, i); rows: the cubic monomials that occur.
    std::map<Exponents, std::size_t> row_of;
    std::vector<Polynomial> products;
    for (std::size_t k = 0; k < ngen; ++k)
        for (std::size_t i = 0; i < nv; ++i) {
            products.push_back(Polynomial::variable(nv, i) * p.generators[k]);
            for (const auto& [e, c] : products.back().terms()) row_of.try_emplace(e, 0);
        }
    std::size_t next = 0;
    for (auto& [e, r] : row_of) r = next++;
    linalg::RationalMatrix m(row_of.size(), products.size());
    for (std::size_t col = 0; col < products.size(); ++col)
        for (const auto& [e, c] : products[col].terms()) m(row_of.at(e), col) = c;

    std::vector<linalg::RationalMatrix> out;
    for (const auto& v : linalg::kernel_basis(m)) {
        linalg::RationalMatrix s(ngen, nv);
        for (std::size_t k = 0; k < ngen; ++k)
            for (std::size_t i = 0; i < nv; ++i) s(k, i) = v[k * nv + i];
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

linalg::RationalMatrix hom_basis_for(const HankelPresentation& p, const std::vector<linalg::RationalMatrix>& syz, int m) {
    const int deg = p.d * (m + 2);
    const std::size_t w = width(deg), ngen = p.generators.size();
    if (w == 0) return linalg::RationalMatrix(0, 0);
    const std::size_t out_w = w + static_cast<std::size_t>(p.d);
    // Row (s, u): coefficient of x0^(deg+d-u) x1^u in sum_k L_k(x) phi_k for syzygy s.
    linalg::RationalMatrix constraints(syz.size() * out_w, ngen * w);
    for (std::size_t s = 0; s < syz.size(); ++s)
        for (std::size_t k = 0; k < ngen; ++k)
            for (std::size_t i = 0; i < p.nvars(); ++i) {
                const Rational& l = syz[s](k, i);
                if (l.is_zero()) continue;
                for (std::size_t t = 0; t < w; ++t) constraints(s * out_w + t + i, k * w + t) += l;
            }
    return linalg::RationalMatrix::from_columns(ngen * w, linalg::kernel_basis(constraints));
}

}  // namespace

linalg::RationalMatrix hom_basis(int d, int m) {
    const HankelPresentation p = build_presentation(d);
    return hom_basis_for(p, linear_syzygies(p), m);
}

AssembledMap assembled_jacobian_map(int d, int m) {
    const HankelPresentation p = build_presentation(d);
    const auto syz = linear_syzygies(p);
    const auto jb = binary_jacobian(p);
    const linalg::RationalMatrix target = hom_basis_for(p, syz, m);
    const int base_deg = d * m, src_deg = d * (m + 1), tgt_deg = d * (m + 2);

    AssembledMap out;
    out.d = d;
    out.m = m;
    out.linear_syzygy_count = as_count(syz.size());
    out.target_h0 = as_count(target.cols());

    // Polynomial vector fields: a complement of the Euler image z * H^0(O(dm)) in H^0(O(d+dm))^(d+1).
    const std::size_t block = width(src_deg);
    const std::size_t ambient = block * p.nvars();
    const linalg::RationalMatrix euler0 = cech::euler_map(d, m, 0);
    // Pivot columns of [euler0 | identity] beyond euler0 pick the unit vectors of the complement.
    linalg::RationalMatrix augmented(ambient, euler0.cols() + ambient);
    for (std::size_t r = 0; r < ambient; ++r) {
        for (std::size_t c = 0; c < euler0.cols(); ++c) augmented(r, c) = euler0(r, c);
        augmented(r, euler0.cols() + r) = 1;
    }
    std::vector<bool> in_complement(ambient, false);
    for (std::size_t c : linalg::echelon_factors(augmented).pivot_columns)
        if (c >= euler0.cols()) in_complement[c - euler0.cols()] = true;

    // Images in the free module: every polynomial derivation first, then the lifts.
    std::vector<std::vector<Rational>> images;
    for (std::size_t idx = 0; idx < ambient; ++idx) {
        std::vector<Polynomial> v(p.nvars(), Polynomial(2));
        const int t = static_cast<int>(idx % block);
        v[idx / block] = binary_monomial(src_deg - t, t);
        images.push_back(apply_jacobian(jb, v, tgt_deg));
    }

    // Lifts of classes c in H^1(O(dm)) killed by every coordinate: z_j c = u_j - w_j with u_j regular
    // where x0 != 0 and w_j regular where x1 != 0; the vector field (u_j) has a global normal component.
    const linalg::RationalMatrix euler1 = cech::euler_map(d, m, 1);
    for (const auto& kv : linalg::kernel_basis(euler1)) {
        const auto cls = cech::CechClass::from_coordinates(base_deg, 1, kv);
        std::vector<Polynomial> u(p.nvars(), Polynomial(2));
        for (int j = 0; j <= d; ++j) {
            Polynomial product(2);
            for (const auto& [mono, c] : cls.terms()) product.add_term({mono.a + d - j, mono.b + j}, c);
            for (const auto& [e, c] : product.terms()) {
                if (e[1] >= 0)
                    u[static_cast<std::size_t>(j)].add_term(e, c);
                else if (e[0] < 0)
                    throw ConsistencyError("kernel class is not a coboundary after multiplication");
            }
        }
        images.push_back(apply_jacobian(jb, u, tgt_deg));
        ++out.lifted_columns;
    }

    const auto free_images = linalg::RationalMatrix::from_columns(target.rows(), images);
    linalg::RationalMatrix coords(target.cols(), images.size());
    if (target.cols() > 0) {
        auto solved = linalg::solve_in_basis(target, free_images);
        if (!solved) throw ConsistencyError("image of a section violates a syzygy relation");
        coords = std::move(*solved);
    } else if (!free_images.is_zero()) {
        throw ConsistencyError("nonzero image in a zero target");
    }

    std::vector<std::vector<Rational>> columns, derivation_columns;
    for (std::size_t c = 0; c < images.size(); ++c) {
        const bool derivation = c < ambient;
        if (derivation) derivation_columns.push_back(coords.column(c));
        if (!derivation || in_complement[c]) columns.push_back(coords.column(c));
    }
    out.polynomial_columns = as_count(columns.size()) - out.lifted_columns;
    out.matrix = linalg::RationalMatrix::from_columns(target.cols(), columns);
    out.source_h0 = as_count(columns.size());
    out.rank = as_count(linalg::rank(out.matrix));
    out.cokernel = out.target_h0 - out.rank;
    out.kernel = out.source_h0 - out.rank;
    out.derivation_rank = as_count(linalg::rank(linalg::RationalMatrix::from_columns(target.cols(), derivation_columns)));
    return out;
}

}  // namespace conedef::rnc
