#ifndef PERMABOUND_MATRIX_HPP
#define PERMABOUND_MATRIX_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "permabound/subset.hpp"

namespace permabound {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries are validated finite on
/// construction; instances are immutable apart from whole-value assignment.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int n_rows, int n_cols, std::vector<Complex> entries);

    /// Zero-filled matrix (entries may be set once via mutable_at before sharing).
    static ComplexMatrix zero(int n_rows, int n_cols);
    static ComplexMatrix identity(int n);
    static ComplexMatrix constant(int n_rows, int n_cols, Complex value);

    int rows() const { return n_rows_; }
    int cols() const { return n_cols_; }
    bool square() const { return n_rows_ == n_cols_; }

    const Complex& at(int row, int col) const { return entries_[idx(row, col)]; }
    Complex& mutable_at(int row, int col) { return entries_[idx(row, col)]; }
    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix transpose() const;
    /// Entrywise modulus, |Z|.
    ComplexMatrix abs() const;

    /// True when every entry is exactly 0 or 1 (real, zero imaginary part).
    bool is_binary() const;

    /// Validate all entries finite; throws std::invalid_argument otherwise.
    void check_finite() const;

private:
    std::size_t idx(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_cols_) +
               static_cast<std::size_t>(col);
    }

    int n_rows_ = 0;
    int n_cols_ = 0;
    std::vector<Complex> entries_;
};

/// Z[rows, cols]: submatrix preserving ascending index order on both axes.
ComplexMatrix submatrix(const ComplexMatrix& z, const IndexSubset& rows, const IndexSubset& cols);

/// Parsers for the two on-disk formats. Both reject non-finite values with
/// parse_error.
///
/// JSON: {"rows": n, "cols": m, "entries": [[re, im], ...]} row-major.
/// CSV:  one row per line, comma-separated "a+bi" / "a-bi" / "a" / "bi"
///       tokens, whitespace-tolerant.
ComplexMatrix parse_matrix_json(const std::string& text);
ComplexMatrix parse_matrix_csv(const std::string& text);
/// Sniffs the format: JSON when the first non-space character is '{'.
ComplexMatrix parse_matrix(const std::string& text);
ComplexMatrix load_matrix_file(const std::string& path);

std::string matrix_to_json(const ComplexMatrix& z);

} // namespace permabound

#endif
