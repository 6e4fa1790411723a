#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "chainmail/complex.hpp"

namespace chainmail {

/// Dense matrix of arbitrary-precision integers, row major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Column-sparse integer matrix with machine-word entries; the carrier for
/// boundary and chain maps of larger complexes.
class SparseIntegerMatrix {
public:
    using Entry = std::pair<std::uint32_t, std::int64_t>;
    using Column = std::vector<Entry>;  // sorted by row, no zeros

    SparseIntegerMatrix() = default;
    SparseIntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    const Column& column(std::size_t c) const { return columns_[c]; }
    /// Adds `value` to entry (r, c).
    void add(std::size_t r, std::size_t c, std::int64_t value);

    IntegerMatrix to_dense() const;

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

/// Nonzero invariant factors d_1 | d_2 | ... (all positive) and the rank.
struct SmithForm {
    std::vector<mpz_class> factors;
    std::size_t rank = 0;
};

/// left * M * right == diagonal, with left and right unimodular.
struct SmithDecomposition {
    SmithForm form;
    IntegerMatrix left;
    IntegerMatrix right;
    IntegerMatrix diagonal;
};

SmithForm smith_normal_form(const IntegerMatrix& M);
SmithDecomposition smith_decomposition(const IntegerMatrix& M);

/// Smith form of a sparse matrix: unit pivots are eliminated in sparse form
/// first, the remainder goes through the dense routine.
SmithForm smith_normal_form(const SparseIntegerMatrix& M);

/// ∂_d from d-faces (columns) to (d-1)-faces (rows), both in lexicographic
/// order; ∂_0 maps every vertex to ∅. Degrees past the top give zero
/// columns.
IntegerMatrix boundary_matrix(const SimplicialComplex& K, int d);
SparseIntegerMatrix sparse_boundary_matrix(const std::vector<std::vector<Mask>>& levels, int d);

struct HomologyGroup {
    int degree = 0;
    std::size_t betti = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1

    bool trivial() const { return betti == 0 && torsion.empty(); }
};

/// Reduced integral homology in degrees -1 .. dim K.
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& K);

/// Reduced homology Z in degree d, zero elsewhere.
bool matches_sphere(const SimplicialComplex& K, int d);
bool matches_sphere(const std::vector<HomologyGroup>& h, int d);
/// All reduced homology zero.
bool matches_point(const SimplicialComplex& K);
bool matches_point(const std::vector<HomologyGroup>& h);

/// Equal groups degree by degree, trivial degrees ignored.
bool same_homology(const std::vector<HomologyGroup>& a, const std::vector<HomologyGroup>& b);

/// `{"<degree>": {"betti": b, "torsion": [..]}}`, trivial degrees omitted.
std::string homology_json(const std::vector<HomologyGroup>& h);
/// Short human form, e.g. "H~_1 = Z" or "0".
std::string homology_summary(const std::vector<HomologyGroup>& h);

} // namespace chainmail
