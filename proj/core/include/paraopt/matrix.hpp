#pragma once

#include "paraopt/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace paraopt {

struct ZeroScale : std::invalid_argument {
    ZeroScale() : std::invalid_argument("scale factor must be nonzero") {}
};
struct BadIndex : std::out_of_range {
    explicit BadIndex(const std::string& what) : std::out_of_range(what) {}
};

/// Dense rational matrix augmented with a column of affine forms in the
/// parameter d. Every row operation touches body and last column alike.
class ParamMatrix {
public:
    ParamMatrix() : rows_(0), cols_(0) {}
    ParamMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), body_(rows * cols, Rational(0)), last_(rows) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t r, size_t c) { return body_[index(r, c)]; }
    const Rational& at(size_t r, size_t c) const { return body_[index(r, c)]; }
    AffineForm& last(size_t r) { return last_[check_row(r)]; }
    const AffineForm& last(size_t r) const { return last_[check_row(r)]; }

    void swap_rows(size_t i, size_t j);
    void scale_row(size_t i, const Rational& k);                      // k != 0
    void add_multiple(size_t i, size_t j, const Rational& k);         // row i += k * row j

    bool row_is_zero(size_t r) const;
    bool operator==(const ParamMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && body_ == o.body_ && last_ == o.last_;
    }

    std::string to_string() const;

private:
    size_t index(size_t r, size_t c) const {
        if (r >= rows_ || c >= cols_) throw BadIndex("matrix index out of range");
        return r * cols_ + c;
    }
    size_t check_row(size_t r) const {
        if (r >= rows_) throw BadIndex("row index out of range");
        return r;
    }

    size_t rows_, cols_;
    std::vector<Rational> body_;
    std::vector<AffineForm> last_;
};

struct RowOp {
    enum class Kind { Swap, Scale, AddMultiple } kind;
    size_t i = 0, j = 0;
    Rational k = 0;

    static RowOp swap(size_t i, size_t j) { return {Kind::Swap, i, j, 0}; }
    static RowOp scale(size_t i, Rational k) { return {Kind::Scale, i, 0, std::move(k)}; }
    static RowOp add_multiple(size_t i, size_t j, Rational k) {
        return {Kind::AddMultiple, i, j, std::move(k)};
    }
    std::string to_string() const;
};

ParamMatrix elementary_row_op(const ParamMatrix& m, const RowOp& op);

/// Reduced row echelon form: unit pivots strictly left-to-right, pivot
/// columns cleared, zero rows last. Pivot choice is the first nonzero
/// entry scanning left-to-right, top-to-bottom; exact arithmetic makes
/// magnitude pivoting unnecessary.
ParamMatrix rref(const ParamMatrix& m);

}  // namespace paraopt
