#include "parageo/exact/scalar.hpp"

#include <cctype>
#include <string>

#include "parageo/error.hpp"

namespace parageo {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DeterminantNotOne: return "DeterminantNotOne";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotInParabolic: return "NotInParabolic";
    case ErrorCode::NotInNilpotentPart: return "NotInNilpotentPart";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::NotOneGraded: return "NotOneGraded";
    case ErrorCode::BadReparam: return "BadReparam";
    case ErrorCode::PoleAtOrigin: return "PoleAtOrigin";
    case ErrorCode::ZeroVelocity: return "ZeroVelocity";
    case ErrorCode::NotApplicableGrading: return "NotApplicableGrading";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_->canonicalize();
  normalize_im();
}

void Scalar::normalize_im() {
  if (im_ && sgn(*im_) == 0) im_.reset();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

namespace {

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  std::string s(text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s));
  s.pop_back();
  // split at the last sign that is not the leading one and not part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string t) {
    if (t.empty() || t == "+") return mpq_class(1);
    if (t == "-") return mpq_class(-1);
    if (t[0] == '+') t.erase(0, 1);
    return parse_rational(t);
  };
  if (split == std::string::npos) return Scalar(mpq_class(0), imag_part(s));
  return Scalar(parse_rational(s.substr(0, split)), imag_part(s.substr(split)));
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  if (r.im_) *r.im_ = -*r.im_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero scalar");
  if (!im_) return Scalar(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + *im_ * *im_;
  return Scalar(re_ / norm, -*im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (o.im_) {
    if (im_) *im_ += *o.im_;
    else im_ = *o.im_;
    normalize_im();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (o.im_) {
    if (im_) *im_ -= *o.im_;
    else im_ = -*o.im_;
    normalize_im();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!im_ && !o.im_) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class a = re_, b = im(), c = o.re_, d = o.im();
  re_ = a * c - b * d;
  im_ = a * d + b * c;
  normalize_im();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "scalar division by zero");
  if (!o.im_) {
    re_ /= o.re_;
    if (im_) *im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.re_ = -r.re_;
  if (r.im_) *r.im_ = -*r.im_;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.re_ != b.re_) return false;
  if (a.im_.has_value() != b.im_.has_value()) return false;
  return !a.im_ || *a.im_ == *b.im_;
}

std::string Scalar::str() const {
  if (!im_) return re_.get_str();
  std::string imag;
  if (*im_ == 1) imag = "";
  else if (*im_ == -1) imag = "-";
  else imag = im_->get_str();
  if (sgn(re_) == 0) return imag + "i";
  if (sgn(*im_) > 0) return re_.get_str() + "+" + imag + "i";
  return re_.get_str() + imag + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Scalar(mpq_class(f));
}

}  // namespace parageo
