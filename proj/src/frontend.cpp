#include "hypersum/frontend.hpp"

#include <chrono>
#include <sstream>

namespace hypersum {

using nlohmann::json;

namespace {

template <class F>
XYFunc lift(const RatFunc<F>& r) {
  if constexpr (std::is_same_v<F, Rat>) {
    return from_univariate(r);
  } else {
    return r;
  }
}
template <class F>
XYFunc lift(const Poly<F>& p) {
  return lift(RatFunc<F>(p));
}

struct Printer {
  bool factored = false;
  std::string operator()(const XYFunc& r) const { return factored ? xy_factored(r) : xy_to_string(r); }
};

struct Input {
  std::optional<HyperForm> term;
  BivariateTerm q;
  bool univariate = false;
};

HyperForm rational_only(const std::string& src, const char* what) {
  HyperForm h = evaluate(*parse_term(src));
  if (!h.gammas.empty()) throw Error(ErrorCode::Parse, std::string(what) + " must be a rational function of x and y");
  return h;
}

Input prepare(const JobSpec& job, json& out) {
  Input in;
  if (job.quotients) {
    const HyperForm f = rational_only(job.quotients->first, "shift quotient f");
    const HyperForm g = rational_only(job.quotients->second, "shift quotient g");
    in.q = {f.rat, g.rat};
    out["input"] = {{"f", xy_to_string(f.rat)}, {"g", xy_to_string(g.rat)}};
    if (!is_compatible(in.q)) {
      throw Error(ErrorCode::Incompatible, "shift quotients are not compatible: sigma_x(g)/g != sigma_y(f)/f");
    }
    in.univariate = f.rat.is_one() && !f.uses_x() && !g.uses_x();
    return in;
  }
  ExprPtr e = parse_term(job.expr);
  in.term = evaluate(*e);
  in.q = shift_quotients(*in.term);
  in.univariate = !in.term->uses_x();
  out["input"] = {{"expr", to_string(*e)},
                  {"term", to_string(*in.term)},
                  {"f", xy_to_string(in.q.f)},
                  {"g", xy_to_string(in.q.g)}};
  return in;
}

template <class F>
void put_reduction(const ReductionResult<F>& r, const Printer& pr, json& out) {
  const auto& K = r.kernel;
  out["kernel"] = {{"u", xy_to_string(lift(K.u))}, {"v", xy_to_string(lift(K.v))}, {"K", pr(lift(K.value()))}};
  out["shell"] = pr(lift(r.shell));
  out["cofactor"] = xy_to_string(lift(r.cofactor));
  const auto& res = r.residual;
  out["residual"] = {{"a", xy_to_string(lift(res.a))},
                     {"b", pr(lift(res.b))},
                     {"q", xy_to_string(lift(res.q))},
                     {"v", xy_to_string(lift(K.v))},
                     {"value", pr(lift(res.value()))},
                     {"zero", res.is_zero()}};
  out["counters"]["shell_degree"] = {r.shell.num().degree(), r.shell.den().degree()};
  out["counters"]["residual_den_degree"] = res.b.degree();
}

template <class F>
ReductionResult<F> reduce_and_put(const RatFunc<F>& g, const Printer& pr, json& out) {
  ReductionResult<F> r = modified_ap_reduction(g);
  put_reduction(r, pr, out);
  return r;
}

/// Summability of the term with y-quotient g; returns the verdict.
template <class F>
bool summable_and_put(const RatFunc<F>& g, const std::optional<HyperForm>& term, const Printer& pr, json& out) {
  Summability<F> s = is_summable(g);
  put_reduction(s.reduction, pr, out);
  out["summable"] = s.summable;
  if (s.summable) {
    const XYFunc w = lift(s.witness_ratio());
    out["witness_ratio"] = xy_to_string(w);
    if (term) {
      HyperForm G = *term;
      G.rat *= w;
      out["witness"] = w.is_zero() ? "0" : to_string(G);
    } else {
      out["witness"] = nullptr;
    }
  } else {
    out["witness"] = nullptr;
  }
  return s.summable;
}

std::string operator_string(const Telescoper& L) {
  std::string s;
  for (int i = L.order(); i >= 0; --i) {
    QPoly c = L.coeffs[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    int terms = 0;
    for (const auto& r : c.coeffs()) terms += r.is_zero() ? 0 : 1;
    const bool neg = terms == 1 && c.lc().sign() < 0;
    if (neg) c = -c;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    std::string cs = c.to_string("x");
    if (terms > 1) cs = "(" + cs + ")";
    const std::string op = i == 0 ? "" : i == 1 ? "S_x" : "S_x^" + std::to_string(i);
    if (op.empty()) s += cs;
    else s += (c.is_one() ? "" : cs + "*") + op;
  }
  return s;
}

int telescope_and_put(const BivariateTerm& t, const JobSpec& job, const Printer& pr, json& out) {
  TelescopeOptions opts;
  opts.want_certificate = job.want_certificate;
  opts.max_order = job.max_order;
  TelescopeResult r = reduction_ct(t, opts);
  const auto& ks = r.kernel_shell;
  out["kernel"] = {{"u", xy_to_string(ks.kernel.u)}, {"v", xy_to_string(ks.kernel.v)}, {"K", pr(ks.kernel.value())}};
  out["shell"] = pr(ks.shell);
  json steps = json::array(), ranks = json::array();
  for (const auto& st : r.steps) {
    steps.push_back({{"a", xy_to_string(st.aligned.a)},
                     {"b", pr(XYFunc(st.aligned.b))},
                     {"q", xy_to_string(st.aligned.q)}});
    ranks.push_back(st.rank);
  }
  out["steps"] = steps;
  out["ranks"] = ranks;
  out["counters"]["steps"] = r.steps.size();
  if (r.status == TelescopeStatus::NoTelescoper) {
    throw Error(ErrorCode::NoTelescoper, "no telescoper exists (existence test failed)");
  }
  if (r.status == TelescopeStatus::OrderCapExceeded) {
    throw Error(ErrorCode::OrderCap, "no telescoper of order <= " + std::to_string(job.max_order));
  }
  json coeffs = json::array();
  for (const auto& c : r.telescoper.coeffs) coeffs.push_back(c.to_string("x"));
  out["telescoper"] = {{"order", r.telescoper.order()}, {"coeffs", coeffs}, {"operator", operator_string(r.telescoper)}};
  if (job.want_certificate) {
    json parts = json::array();
    for (const auto& u : r.certificate_parts) parts.push_back(xy_to_string(u));
    out["certificate_parts"] = parts;
  }
  if (job.want_certificate || job.verify) {
    const bool ok = verify_telescoper(t, r.telescoper, job.want_certificate ? &r.certificate_parts : nullptr);
    out["verified"] = ok;
    if (!ok) throw Error(ErrorCode::Internal, "telescoper failed verification");
  }
  return 0;
}

int compute(const JobSpec& job, json& out) {
  const Printer pr{job.factored};
  if (job.mode == Mode::Bench) {
    const bool uni = job.bench.family == BenchParams::Family::Univariate;
    ExprPtr e = bench_generate(job.bench, job.seed);
    out["bench"] = {{"family", uni ? "univariate" : "bivariate"},
                    {"seed", job.seed},
                    {"lambda", job.bench.lambda},
                    {"mu", job.bench.mu},
                    {"alpha", job.bench.alpha},
                    {"beta", job.bench.beta},
                    {"deg_f", job.bench.deg_f},
                    {"deg_p", job.bench.deg_p}};
    const HyperForm T = evaluate(*e);
    const BivariateTerm q = shift_quotients(T);
    out["input"] = {{"expr", to_string(*e)}};
    const HyperForm C = summable_companion(T);
    const XYFunc cg = shift_quotients(C).g;
    json comp;
    if (uni) {
      reduce_and_put(to_univariate(q.g), pr, out);
      comp["summable"] = is_summable(to_univariate(cg)).summable;
    } else {
      telescope_and_put(q, job, pr, out);
      comp["summable"] = is_summable(cg).summable;
    }
    out["companion"] = comp;
    return 0;
  }

  Input in = prepare(job, out);
  switch (job.mode) {
    case Mode::Reduce:
      if (in.univariate) {
        reduce_and_put(to_univariate(in.q.g), pr, out);
      } else {
        reduce_and_put(in.q.g, pr, out);
      }
      return 0;
    case Mode::Summable: {
      const bool ok = in.univariate ? summable_and_put(to_univariate(in.q.g), in.term, pr, out)
                                    : summable_and_put(in.q.g, in.term, pr, out);
      return !ok && job.want_certificate ? 1 : 0;
    }
    case Mode::Telescope: return telescope_and_put(in.q, job, pr, out);
    case Mode::Bench: break;
  }
  return 0;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NoTelescoper:
    case ErrorCode::OrderCap: return 1;
    case ErrorCode::Parse:
    case ErrorCode::Incompatible: return 2;
    default: return 3;
  }
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Reduce: return "reduce";
    case Mode::Summable: return "summable";
    case Mode::Telescope: return "telescope";
    case Mode::Bench: return "bench";
  }
  return "";
}

void text_lines(const json& j, const std::string& prefix, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      text_lines(*it, key, os);
    } else if (it->is_string()) {
      os << key << ": " << it->get<std::string>() << "\n";
    } else if (it->is_array() && !it->empty() && (*it)[0].is_object()) {
      for (std::size_t i = 0; i < it->size(); ++i) text_lines((*it)[i], key + "[" + std::to_string(i) + "]", os);
    } else {
      os << key << ": " << it->dump() << "\n";
    }
  }
}

}  // namespace

Report run(const JobSpec& job) {
  Report rep;
  json& out = rep.json;
  out["schema"] = 1;
  out["mode"] = mode_name(job.mode);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    rep.exit_code = compute(job, out);
    out["status"] = rep.exit_code == 0 ? "ok" : "not_summable";
  } catch (const ParseError& e) {
    rep.exit_code = 2;
    out["status"] = "error";
    out["error"] = {{"code", "PARSE"}, {"message", e.what()}, {"line", e.line()}, {"column", e.column()}};
  } catch (const Error& e) {
    rep.exit_code = exit_code_for(e.code());
    out["status"] = "error";
    const ErrorCode c = e.code() == ErrorCode::Math ? ErrorCode::Internal : e.code();
    out["error"] = {{"code", error_code_name(c)}, {"message", e.what()}};
  } catch (const std::exception& e) {
    rep.exit_code = 3;
    out["status"] = "error";
    out["error"] = {{"code", "INTERNAL"}, {"message", e.what()}};
  }
  out["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  text_lines(out, "", os);
  rep.text = os.str();
  return rep;
}

}  // namespace hypersum
