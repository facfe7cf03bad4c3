#include "paraopt/matrix.hpp"

#include <sstream>
#include <utility>

namespace paraopt {

void ParamMatrix::swap_rows(size_t i, size_t j) {
    check_row(i);
    check_row(j);
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    std::swap(last_[i], last_[j]);
}

void ParamMatrix::scale_row(size_t i, const Rational& k) {
    check_row(i);
    if (k == 0) throw ZeroScale();
    for (size_t c = 0; c < cols_; ++c) at(i, c) *= k;
    last_[i] *= k;
}

void ParamMatrix::add_multiple(size_t i, size_t j, const Rational& k) {
    check_row(i);
    check_row(j);
    for (size_t c = 0; c < cols_; ++c) at(i, c) += k * at(j, c);
    last_[i] += last_[j] * k;
}

bool ParamMatrix::row_is_zero(size_t r) const {
    for (size_t c = 0; c < cols_; ++c)
        if (at(r, c) != 0) return false;
    return true;
}

std::string ParamMatrix::to_string() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (size_t c = 0; c < cols_; ++c) os << render(at(r, c)) << (c + 1 < cols_ ? ", " : "");
        os << " | " << render(last_[r]) << "]\n";
    }
    return os.str();
}

std::string RowOp::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Swap: os << "R" << i << " <-> R" << j; break;
        case Kind::Scale: os << "R" << i << " *= " << render(k); break;
        case Kind::AddMultiple: os << "R" << i << " += " << render(k) << " * R" << j; break;
    }
    return os.str();
}

ParamMatrix elementary_row_op(const ParamMatrix& m, const RowOp& op) {
    ParamMatrix out = m;
    switch (op.kind) {
        case RowOp::Kind::Swap: out.swap_rows(op.i, op.j); break;
        case RowOp::Kind::Scale: out.scale_row(op.i, op.k); break;
        case RowOp::Kind::AddMultiple: out.add_multiple(op.i, op.j, op.k); break;
    }
    return out;
}

ParamMatrix rref(const ParamMatrix& m) {
    ParamMatrix r = m;
    size_t pivot_row = 0;
    for (size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        size_t sel = pivot_row;
        while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        r.swap_rows(pivot_row, sel);
        if (r.at(pivot_row, col) != 1) r.scale_row(pivot_row, Rational(1) / r.at(pivot_row, col));
        for (size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row) continue;
            if (r.at(i, col) != 0) r.add_multiple(i, pivot_row, Rational(-r.at(i, col)));
        }
        ++pivot_row;
    }
    return r;
}

}  // namespace paraopt
