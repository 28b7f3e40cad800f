// Copyright 2026 The detmoments Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "detmoments/seqfit.hpp"

#include "detmoments/errors.hpp"

#include <optional>
#include <string>

namespace detmoments {

namespace {

using Matrix = std::vector<std::vector<Integer>>;

// Fraction-free (Bareiss) row echelon form in place; returns the pivot columns.
std::vector<std::size_t> bareiss(Matrix &m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) {
        return pivots;
    }
    std::size_t rows = m.size();
    std::size_t cols = m[0].size();
    Integer previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                m[i][j] = v;
            }
            m[i][c] = 0;
        }
        previous = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t cols) {
    std::vector<std::size_t> pivots = bareiss(m);
    std::vector<bool> isPivot(cols, false);
    for (auto c : pivots) {
        isPivot[c] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (isPivot[f]) {
            continue;
        }
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t r = pivots.size(); r-- > 0;) {
            std::size_t c = pivots[r];
            Rational s = 0;
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (x[j] != 0) {
                    s += Rational(m[r][j]) * x[j];
                }
            }
            x[c] = -s / Rational(m[r][c]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace

RationalFunctionQ fitRational(const FitProblem &fp) {
    int p = fp.numDegree;
    int q = fp.denDegree;
    if (p < 0 || q < 0) {
        throw DomainError("degrees must be nonnegative");
    }
    std::size_t cols = static_cast<std::size_t>(p + q + 2);
    if (fp.values.size() < cols) {
        throw DomainError("need at least " + std::to_string(cols) + " values for degrees " + std::to_string(p) +
                          "/" + std::to_string(q));
    }
    // Row: [x^0..x^p | -v x^0 .. -v x^q], scaled to integers.
    Matrix m;
    for (const auto &[k, v] : fp.values) {
        Rational x = Rational(k + fp.indexOffset);
        std::vector<Rational> row;
        Rational xp = 1;
        for (int i = 0; i <= p; ++i, xp *= x) {
            row.push_back(xp);
        }
        xp = 1;
        for (int i = 0; i <= q; ++i, xp *= x) {
            row.push_back(-v * xp);
        }
        Integer l = 1;
        for (const auto &e : row) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
        }
        std::vector<Integer> integral;
        for (const auto &e : row) {
            integral.push_back(Integer(e * l));
        }
        m.push_back(std::move(integral));
    }
    auto basis = nullspace(std::move(m), cols);
    if (basis.empty()) {
        throw NoFit("no rational function of degrees " + std::to_string(p) + "/" + std::to_string(q) +
                    " fits the values");
    }
    std::optional<RationalFunctionQ> found;
    for (const auto &x : basis) {
        PolynomialQ num(std::vector<Rational>(x.begin(), x.begin() + p + 1));
        PolynomialQ den(std::vector<Rational>(x.begin() + p + 1, x.end()));
        if (den.isZero()) {
            throw NoFit("degenerate solution with a vanishing denominator");
        }
        RationalFunctionQ r(num, den);
        if (found && !(*found == r)) {
            throw AmbiguousFit("solution space of dimension " + std::to_string(basis.size()) +
                               " holds distinct functions");
        }
        found = r;
    }
    for (const auto &[k, v] : fp.values) {
        Rational x = Rational(k + fp.indexOffset);
        if (found->isPole(x) || (*found)(x) != v) {
            throw NoFit("sample k=" + std::to_string(k) + " falls on a pole of the only candidate");
        }
    }
    return *found;
}

RationalFunctionQ shiftIndex(const RationalFunctionQ &r, long delta) { return r.shifted(Rational(delta)); }

RationalFunctionQ autoFit(const std::vector<SamplePoint> &values, int maxTotalDegree) {
    for (int d = 0; d <= maxTotalDegree; ++d) {
        if (values.size() < static_cast<std::size_t>(d + 2)) {
            break;
        }
        for (int q = 0; q <= d; ++q) {
            FitProblem fp{values, d - q, q, 0};
            try {
                return fitRational(fp);
            } catch (const NoFit &) {
            } catch (const AmbiguousFit &) {
            }
        }
    }
    throw NoFit("no rational function of total degree <= " + std::to_string(maxTotalDegree) + " fits " +
                std::to_string(values.size()) + " values");
}

std::vector<SamplePoint> sampleFunction(const RationalFunctionQ &r, long start, long count) {
    std::vector<SamplePoint> out;
    for (long k = start; static_cast<long>(out.size()) < count; ++k) {
        if (!r.isPole(Rational(k))) {
            out.emplace_back(k, r(Rational(k)));
        }
    }
    return out;
}

} // namespace detmoments
