#include <random>

#include "hypersum/term.hpp"

namespace hypersum {

namespace {

constexpr int kCoeffRange = 10;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long coeff() { return dist_(rng_); }
  long nonzero() {
    long c = 0;
    while (c == 0) c = coeff();
    return c;
  }

  /// Degree-d integer polynomial with no integer root (so that no factor of
  /// g_i(z) is shift-equivalent to the Gamma arguments by accident).
  QPoly p_poly(int d) {
    for (;;) {
      std::vector<Rat> c;
      for (int i = 0; i < d; ++i) c.emplace_back(coeff());
      c.emplace_back(nonzero());
      QPoly p(c);
      bool ok = true;
      for (const Rat& r : rational_roots(p)) ok = ok && !r.is_integer();
      if (ok) return p;
    }
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> dist_{-kCoeffRange, kCoeffRange};
};

std::string signed_term(long c, const std::string& mono, bool first) {
  std::string s = first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
  const long a = c < 0 ? -c : c;
  if (mono.empty()) return s + std::to_string(a);
  return s + (a == 1 ? "" : std::to_string(a) + "*") + mono;
}

/// p(z) with z replaced by the text arg.
std::string compose(const QPoly& p, const std::string& arg) {
  std::string s;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& c = p.coeff(k);
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : "(" + arg + ")" + (k > 1 ? "^" + std::to_string(k) : "");
    s += signed_term(c.num().get_si(), mono, first);
    first = false;
  }
  return s;
}

std::string shifted(const std::string& z, int s) { return s == 0 ? z : z + " + " + std::to_string(s); }

std::string denominator(Sampler& rng, int deg_p, const std::vector<std::string>& vars, int lambda, int mu) {
  std::string s;
  for (const auto& z : vars) {
    const QPoly p = rng.p_poly(deg_p);
    for (int sh : {0, lambda, mu}) s += (s.empty() ? "(" : "*(") + compose(p, shifted(z, sh)) + ")";
  }
  return s;
}

std::string lin(long m, const char* v, long n, const char* w) {
  if (m == 0) return signed_term(n, w, true);
  return signed_term(m, v, true) + (n != 0 ? signed_term(n, w, false) : "");
}

}  // namespace

ExprPtr bench_generate(const BenchParams& p, std::uint64_t seed) {
  if (p.lambda < 0 || p.mu < 0 || p.deg_f < 0 || p.deg_p < 1 || p.alpha < 0 || p.beta < 0) {
    throw Error(ErrorCode::Parse, "benchmark parameters must be nonnegative (deg_p >= 1)");
  }
  if (p.deg_f > 60 || p.deg_p > 30 || p.lambda > 100 || p.mu > 100 || p.alpha > 20 || p.beta > 100) {
    throw Error(ErrorCode::Parse, "benchmark parameters exceed the caps (deg_f 60, deg_p 30, shifts 100, alpha 20)");
  }
  Sampler rng(seed);
  std::string num;
  std::string text;
  if (p.family == BenchParams::Family::Univariate) {
    std::vector<Rat> c;
    for (int i = 0; i < p.deg_f; ++i) c.emplace_back(rng.coeff());
    c.emplace_back(rng.nonzero());
    num = compose(QPoly(c), "y");
    text = "(" + num + ")/(" + denominator(rng, p.deg_p, {"y"}, p.lambda, p.mu) + ")";
    text += "*gamma_ratio(y - " + std::to_string(p.alpha) + ", y - " + std::to_string(p.beta) + ")";
  } else {
    // f(x, y) of total degree deg_f
    bool first = true, top = false;
    while (!top) {
      num.clear();
      first = true;
      for (int d = p.deg_f; d >= 0; --d) {
        for (int j = d; j >= 0; --j) {
          const long c = rng.coeff();
          if (c == 0) continue;
          top = top || d == p.deg_f;
          const int i = d - j;
          std::string mono;
          if (i > 0) mono += "x" + (i > 1 ? "^" + std::to_string(i) : std::string());
          if (j > 0) mono += (mono.empty() ? "" : "*") + std::string("y") + (j > 1 ? "^" + std::to_string(j) : "");
          num += signed_term(c, mono, first);
          first = false;
        }
      }
    }
    text = "(" + num + ")/(" + denominator(rng, p.deg_p, {"x + y", "2*x + y"}, p.lambda, p.mu) + ")";
    const long a = p.alpha;
    text += "*gamma_ratio(" + lin(2 * a, "x", 1, "y") + ", " + lin(1, "x", a, "y") + ")";
  }
  return parse_term(text);
}

}  // namespace hypersum
