#include "flab/swenum/characteristic.hpp"

#include "flab/checked.hpp"
#include "flab/error.hpp"

namespace flab::swenum {

bool is_characteristic(const IntVector& v, const IntegerMatrix& q) {
  if (q.rows() != q.cols() || v.size() != q.rows())
    throw Error(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(v.size()) + " against " +
                                                  std::to_string(q.rows()) + "x" + std::to_string(q.cols()) + " form");
  const IntVector qv = q * v;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (((qv[i] - q(i, i)) % 2) != 0) return false;
  return true;
}

SwDimension sw_dimension(const IntVector& beta, std::int64_t euler, std::int64_t signature, const IntegerMatrix& q) {
  const std::int64_t sq = fpgroup::bilinear(q, beta, beta);
  const std::int64_t num = checked::sub(checked::sub(sq, checked::mul(2, euler)), checked::mul(3, signature));
  SwDimension d;
  d.value = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(4));
  d.value.canonicalize();
  d.integral = d.value.get_den() == 1;
  return d;
}

}  // namespace flab::swenum
