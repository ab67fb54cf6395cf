#include "m2z/mat2.hpp"

#include <cctype>
#include <utility>

#include "m2z/error.hpp"

namespace m2z {

namespace {

std::strong_ordering compare(const Int& x, const Int& y) {
  const int c = cmp(x, y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const Mat2& x, const Mat2& y) {
  if (auto c = compare(x.e11, y.e11); c != 0) return c;
  if (auto c = compare(x.e12, y.e12); c != 0) return c;
  if (auto c = compare(x.e21, y.e21); c != 0) return c;
  return compare(x.e22, y.e22);
}

Mat2& Mat2::operator+=(const Mat2& o) {
  e11 += o.e11;
  e12 += o.e12;
  e21 += o.e21;
  e22 += o.e22;
  return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
  e11 -= o.e11;
  e12 -= o.e12;
  e21 -= o.e21;
  e22 -= o.e22;
  return *this;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
          x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
}

Mat2 mat_arith(const Mat2& a, const Mat2& b, MatOp op, const Int& lambda) {
  switch (op) {
    case MatOp::add:
      return a + b;
    case MatOp::sub:
      return a - b;
    case MatOp::mul:
      return a * b;
    case MatOp::scalar_mul:
      return lambda * a;
  }
  throw PreconditionError("unknown matrix operation");
}

namespace {

// (y_n, y_{n-1}) of y_j = T*y_{j-1} - D*y_{j-2}, y_0 = 1, y_{-1} = 0.
std::pair<Int, Int> sequence_pair(const Int& trace, const Int& det, unsigned long n) {
  Int prev = 0;
  Int cur = 1;
  for (unsigned long j = 0; j < n; ++j) {
    Int next = trace * cur - det * prev;
    prev.swap(cur);
    cur.swap(next);
  }
  return {std::move(cur), std::move(prev)};
}

}  // namespace

Int power_sequence(const Int& trace, const Int& det, unsigned long n) {
  return sequence_pair(trace, det, n).first;
}

Mat2 pow_closed(const Mat2& a, unsigned long n) {
  if (n == 0) throw PreconditionError("pow_closed requires n >= 1");
  const auto [yn, yn1] = sequence_pair(a.trace(), a.det(), n);
  return {yn - a.e22 * yn1, a.e12 * yn1, a.e21 * yn1, yn - a.e11 * yn1};
}

CommVector comm_vector(const Mat2& a) { return {a.e11 - a.e22, a.e12, a.e21}; }

CommVector comm_cross(const Mat2& a, const Mat2& b) {
  const CommVector t = comm_vector(a);
  const CommVector s = comm_vector(b);
  return {t.v2 * s.v3 - t.v3 * s.v2, t.v3 * s.v1 - t.v1 * s.v3, t.v1 * s.v2 - t.v2 * s.v1};
}

bool commutes(const Mat2& a, const Mat2& b) { return comm_cross(a, b).is_zero(); }

ScalarPowerClass scalar_order_classify(const Mat2& a) {
  if (a.is_scalar()) return ScalarOrder{1, a.e11};
  const Int t = a.trace();
  const Int d = a.det();
  if (t == 0) {
    // Traceless and nonzero: X^2 = (a^2 + bc) I, possibly 0 when nilpotent.
    return ScalarOrder{2, a.e11 * a.e11 + a.e12 * a.e21};
  }
  const Int t2 = t * t;
  if (t2 == d) return ScalarOrder{3, -(t2 * t)};
  if (t2 == 2 * d) return ScalarOrder{4, -(d * d)};
  if (t2 == 3 * d) return ScalarOrder{6, -(d * d * d)};
  return std::nullopt;
}

std::optional<Int> is_scalar_power(const Mat2& a, unsigned long m) {
  if (m == 0) throw PreconditionError("is_scalar_power requires m >= 1");
  if (a.det() == 0) {
    const Mat2 p = pow_closed(a, m);
    if (p.is_scalar()) return p.e11;
    return std::nullopt;
  }
  const ScalarPowerClass cls = scalar_order_classify(a);
  if (!cls || m % static_cast<unsigned long>(cls->k) != 0) return std::nullopt;
  return pow(cls->value, m / static_cast<unsigned long>(cls->k));
}

namespace {

class MatrixParser {
 public:
  explicit MatrixParser(std::string_view text) : text_(text) {}

  Mat2 parse() {
    expect('[');
    expect('[');
    Int e11 = integer();
    expect(',');
    Int e12 = integer();
    expect(']');
    expect(',');
    expect('[');
    Int e21 = integer();
    expect(',');
    Int e22 = integer();
    expect(']');
    expect(']');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return {std::move(e11), std::move(e12), std::move(e21), std::move(e22)};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char ch) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  Int integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return parse_int(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad matrix '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Mat2 parse_mat2(std::string_view text) { return MatrixParser(text).parse(); }

std::string to_string(const Mat2& a) {
  return "[[" + to_string(a.e11) + "," + to_string(a.e12) + "],[" + to_string(a.e21) + "," +
         to_string(a.e22) + "]]";
}

std::size_t Mat2Hash::operator()(const Mat2& a) const {
  std::size_t h = hash_value(a.e11);
  for (const Int* e : {&a.e12, &a.e21, &a.e22}) {
    h ^= hash_value(*e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace m2z
