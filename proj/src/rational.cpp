#include "g2mae/rational.hpp"

#include <stdexcept>

namespace g2mae {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  Rat q;
  if (q.set_str(s, 10) != 0 || sgn(Rat(q.get_den())) == 0)
    throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");
  q.canonicalize();
  return q;
}

Rat RatSampler::next() {
  long p = next_int(-9, 9);
  long q = next_int(1, 9);
  return rat(p, q);
}

Rat RatSampler::next_nonzero() {
  for (;;) {
    Rat q = next();
    if (sgn(q) != 0) return q;
  }
}

long RatSampler::next_int(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng_);
}

}  // namespace g2mae
