#include "burniat/smith.hpp"

#include <cassert>
#include <sstream>

namespace burniat {

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

BigInt IntMatrix::determinant() const
{
    if (rows_ != cols_)
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                assert(t % prev == 0);
                m(i, j) = t / prev;
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

namespace {

// Pivot rule: smallest nonzero absolute value in the trailing submatrix,
// ties broken by lowest (row, col), so results are deterministic.
bool find_pivot(const IntMatrix &d, std::size_t s, std::size_t &pi, std::size_t &pj)
{
    bool found = false;
    BigInt best;
    for (std::size_t i = s; i < d.rows(); ++i)
        for (std::size_t j = s; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            BigInt v = abs(d(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

bool row_col_clear(const IntMatrix &d, std::size_t s)
{
    for (std::size_t i = s + 1; i < d.rows(); ++i)
        if (d(i, s) != 0) return false;
    for (std::size_t j = s + 1; j < d.cols(); ++j)
        if (d(s, j) != 0) return false;
    return true;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix &m)
{
    if (m.empty())
        throw std::invalid_argument("smith_normal_form: empty matrix");

    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t nmin = std::min(rows, cols);

    IntMatrix d = m;
    IntMatrix left = IntMatrix::identity(rows);
    IntMatrix right = IntMatrix::identity(cols);

    for (std::size_t s = 0; s < nmin; ++s) {
        std::size_t pi = s, pj = s;
        if (!find_pivot(d, s, pi, pj)) break; // trailing block is zero

        d.swap_rows(s, pi);
        left.swap_rows(s, pi);
        d.swap_cols(s, pj);
        right.swap_cols(s, pj);

        for (;;) {
            // Clear column s below the pivot, then row s to its right.
            for (std::size_t i = s + 1; i < rows; ++i)
                if (d(i, s) != 0) {
                    BigInt q = d(i, s) / d(s, s);
                    d.add_row(i, s, -q);
                    left.add_row(i, s, -q);
                }
            for (std::size_t j = s + 1; j < cols; ++j)
                if (d(s, j) != 0) {
                    BigInt q = d(s, j) / d(s, s);
                    d.add_col(j, s, -q);
                    right.add_col(j, s, -q);
                }
            if (!row_col_clear(d, s)) {
                // Division left remainders; pull the new smallest pivot in.
                find_pivot(d, s, pi, pj);
                d.swap_rows(s, pi);
                left.swap_rows(s, pi);
                d.swap_cols(s, pj);
                right.swap_cols(s, pj);
                continue;
            }
            // Divisibility: d(s,s) must divide every trailing entry.
            bool fixed = true;
            for (std::size_t i = s + 1; i < rows && fixed; ++i)
                for (std::size_t j = s + 1; j < cols && fixed; ++j)
                    if (d(i, j) % d(s, s) != 0) {
                        d.add_row(s, i, 1);
                        left.add_row(s, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }

        if (d(s, s) < 0) {
            d.negate_row(s);
            left.negate_row(s);
        }
    }

    SmithForm out;
    out.diagonal.reserve(nmin);
    for (std::size_t s = 0; s < nmin; ++s) out.diagonal.push_back(d(s, s));
    out.left = std::move(left);
    out.right = std::move(right);

    assert(out.left * m * out.right == d);
    assert(abs(out.left.determinant()) == 1);
    assert(abs(out.right.determinant()) == 1);
    for (std::size_t s = 0; s + 1 < nmin; ++s)
        assert(out.diagonal[s + 1] == 0 || (out.diagonal[s] != 0 && out.diagonal[s + 1] % out.diagonal[s] == 0) ||
               (out.diagonal[s] == 0 && out.diagonal[s + 1] == 0));
    return out;
}

AbelianInvariants abelian_invariants(const IntMatrix &relations, std::size_t n_generators)
{
    if (relations.rows() != 0 && relations.cols() != n_generators)
        throw std::invalid_argument("abelian_invariants: relation columns != generator count");

    AbelianInvariants inv;
    if (relations.rows() == 0 || n_generators == 0) {
        inv.free_rank = n_generators;
        return inv;
    }

    SmithForm snf = smith_normal_form(relations);
    std::size_t rank = 0;
    for (const auto &dv : snf.diagonal)
        if (dv != 0) {
            ++rank;
            if (dv >= 2) inv.torsion.push_back(dv);
        }
    inv.free_rank = n_generators - rank;
    return inv;
}

std::string AbelianInvariants::to_string() const
{
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    // Group equal torsion coefficients: (Z/2)^6 rather than six factors.
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        if (!first) os << " + ";
        os << "(Z/" << torsion[i] << ")";
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace burniat
