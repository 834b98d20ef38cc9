#include "threefold/lattice.hpp"

#include <stdexcept>

namespace threefold {

namespace {

int rows_of(const IMat& m) { return static_cast<int>(m.size()); }
int cols_of(const IMat& m) { return m.empty() ? 0 : static_cast<int>(m[0].size()); }

void swap_cols(IMat& m, int i, int j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

// col_j += f * col_i
void add_col(IMat& m, int j, int i, const Integer& f) {
    for (auto& row : m) row[j] += f * row[i];
}

void swap_rows(IMat& m, int i, int j) { std::swap(m[i], m[j]); }

// row_j += f * row_i
void add_row(IMat& m, int j, int i, const Integer& f) {
    for (int c = 0; c < cols_of(m); ++c) m[j][c] += f * m[i][c];
}

}  // namespace

IMat identity_matrix(int n) {
    IMat m(n, IVec(n, 0));
    for (int k = 0; k < n; ++k) m[k][k] = 1;
    return m;
}

IMat column_basis(const IMat& generators) {
    IMat a = generators;
    int nr = rows_of(a), nc = cols_of(a);
    if (nc < nr) throw std::domain_error("column_basis: too few generators");
    int col = 0;
    for (int row = 0; row < nr; ++row) {
        // clear row `row` to a single pivot at `col` by gcd column ops
        while (true) {
            int pivot = -1;
            for (int c = col; c < nc; ++c)
                if (a[row][c] != 0) { pivot = c; break; }
            if (pivot < 0) throw std::domain_error("column_basis: generators not full rank");
            if (pivot != col) swap_cols(a, col, pivot);
            bool clean = true;
            for (int c = col + 1; c < nc; ++c) {
                if (a[row][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[row][c].get_mpz_t(), a[row][col].get_mpz_t());
                add_col(a, c, col, -q);
                if (a[row][c] != 0) clean = false;
            }
            if (clean) break;
            // remainders left: move the smallest nonzero forward and repeat
            for (int c = col + 1; c < nc; ++c)
                if (a[row][c] != 0 && abs(a[row][c]) < abs(a[row][col])) swap_cols(a, col, c);
        }
        if (sgn(a[row][col]) < 0)
            for (int rr = 0; rr < nr; ++rr) a[rr][col] = -a[rr][col];
        ++col;
    }
    IMat b(nr, IVec(nr));
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nr; ++c) b[r][c] = a[r][c];
    return b;
}

std::vector<Rational> solve_linear(const IMat& B, const IVec& c) {
    int n = rows_of(B);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) m[r][k] = Rational(B[r][k]);
        m[r][n] = Rational(c[r]);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("solve_linear: singular matrix");
        std::swap(m[col], m[pivot]);
        Rational inv = Rational(1) / m[col][col];
        for (int k = col; k <= n; ++k) m[col][k] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (int k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::vector<Rational> x(n);
    for (int r = 0; r < n; ++r) x[r] = m[r][n];
    return x;
}

QuotientGroup quotient_group(const IMat& basis, const IMat& sub) {
    int n = rows_of(basis);
    if (cols_of(sub) != n || rows_of(sub) != n)
        throw std::domain_error("quotient_group: sublattice must have full rank");

    // express sub in the basis: A = basis^{-1} sub, required integral
    IMat a(n, IVec(n));
    for (int c = 0; c < n; ++c) {
        IVec col(n);
        for (int r = 0; r < n; ++r) col[r] = sub[r][c];
        auto x = solve_linear(basis, col);
        for (int r = 0; r < n; ++r) {
            if (!x[r].is_integer())
                throw std::domain_error("quotient_group: not a sublattice of the given lattice");
            a[r][c] = x[r].num();
        }
    }

    // Smith reduction of a; row operations are mirrored inversely on the
    // cobasis so that its columns stay a basis of L aligned with the
    // invariant factors: a <- R a implies cobasis <- cobasis R^{-1}.
    IMat cob = basis;
    for (int k = 0; k < n; ++k) {
        while (true) {
            int pr = -1, pc = -1;
            for (int r = k; r < n && pr < 0; ++r)
                for (int c = k; c < n; ++c)
                    if (a[r][c] != 0) { pr = r; pc = c; break; }
            if (pr < 0) throw std::domain_error("quotient_group: sublattice not full rank");
            // move the smallest nonzero entry to (k, k)
            for (int r = k; r < n; ++r)
                for (int c = k; c < n; ++c)
                    if (a[r][c] != 0 && abs(a[r][c]) < abs(a[pr][pc])) { pr = r; pc = c; }
            if (pr != k) { swap_rows(a, k, pr); swap_cols(cob, k, pr); }
            if (pc != k) swap_cols(a, k, pc);
            bool clean = true;
            for (int r = k + 1; r < n; ++r) {
                if (a[r][k] == 0) continue;
                Integer q = a[r][k] / a[k][k];
                add_row(a, r, k, -q);
                add_col(cob, k, r, q);
                if (a[r][k] != 0) clean = false;
            }
            for (int c = k + 1; c < n; ++c) {
                if (a[k][c] == 0) continue;
                Integer q = a[k][c] / a[k][k];
                for (int r = 0; r < n; ++r) a[r][c] -= q * a[r][k];
                if (a[k][c] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: a[k][k] must divide the remaining block
            bool divides = true;
            for (int r = k + 1; r < n && divides; ++r)
                for (int c = k + 1; c < n; ++c)
                    if (a[r][c] % a[k][k] != 0) {
                        add_row(a, k, r, 1);
                        add_col(cob, r, k, -1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (sgn(a[k][k]) < 0) {
            for (int r = 0; r < n; ++r) a[r][k] = -a[r][k];
        }
    }

    QuotientGroup g;
    int nontrivial = -1;
    for (int k = 0; k < n; ++k) {
        g.order *= a[k][k];
        if (a[k][k] > 1) {
            g.invariants.push_back(a[k][k]);
            nontrivial = k;
        }
    }
    g.cyclic = g.invariants.size() <= 1;
    if (g.cyclic) {
        g.generator.assign(n, 0);
        if (nontrivial >= 0)
            for (int r = 0; r < n; ++r) g.generator[r] = cob[r][nontrivial];
    }
    return g;
}

}  // namespace threefold
