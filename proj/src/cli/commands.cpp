#include <bit>
#include <sstream>

#include "noethera/cli.hpp"
#include "noethera/dsl.hpp"
#include "noethera/report_json.hpp"

namespace noethera::cli {

using nlohmann::json;

const std::vector<std::string>& ring_verbs() {
  static const std::vector<std::string> verbs = {"parse-check", "spectrum", "ideals",      "mu",
                                                 "rank",        "lrk",      "classify",    "decompose",
                                                 "hilbert",     "poly-report"};
  return verbs;
}

ExitCode worse(ExitCode a, ExitCode b) {
  auto severity = [](ExitCode c) {
    switch (c) {
      case ExitCode::InvariantBreach: return 3;
      case ExitCode::BudgetExhausted: return 2;
      case ExitCode::InputError: return 1;
      case ExitCode::Success: return 0;
    }
    return 0;
  };
  return severity(a) >= severity(b) ? a : b;
}

namespace {

const FiniteRing& require_finite(const RingObject& object, const std::string& verb) {
  if (auto* f = object.as_finite()) return *f;
  throw InputError(verb + " needs a finite ring; " + object.describe() + " is not finite");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json spectrum_json(const RingObject& object, const EngineOptions& opts) {
  json j{{"object", object.describe()}};
  if (auto* f = object.as_finite()) {
    j["kind"] = "finite";
    const auto nil = nilradical(*f);
    j["nilradical"] = to_json(*f, nil);
    j["reduced"] = nil.is_zero();
    j["maximal_ideals"] = json::array();
    if (!f->is_zero_ring()) {
      const auto dec = local_decompose(*f, opts.build);
      const auto maxima = maximal_ideals(*f, dec);
      for (std::size_t i = 0; i < maxima.size(); ++i) {
        auto m = to_json(*f, maxima[i]);
        m["residue_field_size"] = dec.factors[i].residue_field_size;
        j["maximal_ideals"].push_back(m);
      }
    }
    return j;
  }
  if (auto* q = object.as_quadratic()) {
    j["kind"] = "quadratic-order";
    j["discriminant"] = q->discriminant();
    j["conductor"] = q->conductor();
    j["primes"] = json::array();
    for (std::uint64_t p = 2; p <= opts.dedekind.sample_prime_bound; ++p) {
      if (!is_prime(p)) continue;
      const auto s = factor_prime(*q, p, opts.dedekind);
      json e{{"p", p}, {"kind", to_string(s.kind)}, {"factors", json::array()}};
      for (const auto& f : s.factors)
        e["factors"].push_back({{"ideal", format_ideal(*q, f.ideal)},
                                {"exponent", f.exponent},
                                {"residue_degree", f.residue_degree}});
      j["primes"].push_back(e);
    }
    return j;
  }
  if (auto* p = object.as_poly()) {
    j["kind"] = "polynomial";
    RingObject base = RingObject{p->base, {}};
    j["base"] = spectrum_json(base, opts);
    j["note"] = "maximal ideals of A[t] are (m, f) for m maximal in A and f irreducible over A/m";
    return j;
  }
  j["kind"] = "product";
  j["components"] = json::array();
  for (const auto& c : object.as_product()->components) j["components"].push_back(spectrum_json(c, opts));
  return j;
}

json ideals_json(const FiniteRing& ring, const EngineOptions& opts) {
  const auto lattice = lattice_for(ring, opts);
  const auto dec = local_decompose(ring, opts.build);
  json list = json::array();
  for (const auto& ideal : lattice.ideals()) {
    auto e = to_json(ring, ideal);
    e["mu"] = ring.is_zero_ring() ? 0 : mu(ring, dec, ideal).count();
    list.push_back(e);
  }
  return {{"count", lattice.size()}, {"ideals", list}};
}

json mu_json(const RingObject& object, const std::string& gens_text) {
  const auto literals = dsl::parse_elements(gens_text);
  if (auto* f = object.as_finite()) {
    std::vector<Elem> gens;
    for (const auto& l : literals) gens.push_back(dsl::resolve_element(*f, l));
    const auto ideal = ideal_generated(*f, gens);
    const auto w = mu(*f, ideal);
    std::vector<std::string> labels;
    for (Elem g : w.generators) labels.push_back(f->label(g));
    json j{{"ideal", to_json(*f, ideal)}, {"mu", w.count()}, {"generators", labels}, {"method", "nakayama"}};
    if (f->size() <= 64) {
      const auto bf = mu_bruteforce(*f, ideal);
      if (bf.count() != w.count())
        throw InvariantError("mu: Nakayama gives " + std::to_string(w.count()) + ", brute force " +
                             std::to_string(bf.count()));
      j["bruteforce_agrees"] = true;
    }
    return j;
  }
  if (auto* q = object.as_quadratic()) {
    std::vector<QuadElement> gens;
    for (const auto& l : literals) {
      if (auto* v = std::get_if<dsl::VectorLiteral>(&l.value); v && v->coords.size() == 2) {
        gens.push_back({v->coords[0], v->coords[1]});
      } else if (auto* p = std::get_if<dsl::PolyLiteral>(&l.value); p && p->coeffs.size() <= 1) {
        gens.push_back({p->coeffs.empty() ? 0 : p->coeffs[0], 0});
      } else {
        throw InputError("order elements are written [x,y] for x + y*" + q->omega_text() + ", got " + dsl::print(l));
      }
    }
    const auto ideal = ideal_from_generators(*q, gens);
    const auto gen = is_principal(*q, ideal);
    json j{{"ideal", format_ideal(*q, ideal)}, {"norm", ideal.norm()}, {"mu", gen ? 1 : 2}};
    std::vector<std::string> labels;
    if (gen)
      labels.push_back(q->format(*gen));
    else
      for (auto b : ideal.basis()) labels.push_back(q->format(b));
    j["generators"] = labels;
    return j;
  }
  throw InputError("mu needs a finite ring or a quadratic order");
}

json hilbert_json(const FiniteRing& ring, const EngineOptions& opts) {
  json j{{"factors", json::array()}};
  if (ring.is_zero_ring()) return j;
  const auto dec = local_decompose(ring, opts.build);
  for (const auto& f : dec.factors) {
    auto h = to_json(hilbert_function(f.ring, static_cast<std::size_t>(std::bit_width(f.ring.size())) + 1));
    h["factor_size"] = f.ring.size();
    j["factors"].push_back(h);
  }
  return j;
}

std::string rank_text(const RankReport& r) {
  std::ostringstream os;
  os << "object: " << r.object << "\nrk: " << r.rk.text() << "\nlrk: " << r.lrk.text() << "\nof local rank: "
     << (r.of_local_rank ? yes_no(*r.of_local_rank) : "undetermined") << "\ndimension: " << to_string(r.dimension)
     << "\n";
  if (r.rk_witness) os << "rk witness: " << r.rk_witness->ideal << ", mu = " << r.rk_witness->mu << "\n";
  if (r.lrk_witness)
    os << "lrk witness: at " << r.lrk_witness->maximal_ideal << ", " << r.lrk_witness->ideal << " has local mu "
       << r.lrk_witness->local_mu << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string classify_text(const Classification& c) {
  std::ostringstream os;
  os << "object: " << c.object << "\nverdict: " << (c.of_local_rank ? "of-local-rank" : "not-of-local-rank")
     << "\nrk: " << c.rk.text() << ", lrk: " << c.lrk.text() << "\n";
  for (const auto& comp : c.components)
    os << "component: " << comp.description << " -> " << to_string(comp.tag)
       << (comp.reason ? " (" + *comp.reason + ")" : "") << "\n";
  for (const auto& r : c.reasons) os << "reason: " << r << "\n";
  return os.str();
}

CommandOutcome dispatch(const std::string& verb, const std::string& ring_text, const CommandOptions& opts) {
  CommandOutcome out;
  const auto expr = dsl::parse(ring_text);
  if (verb == "parse-check") {
    out.report = {{"input", ring_text}, {"canonical", dsl::print(expr)}, {"ok", true}};
    out.text = dsl::print(expr) + "\n";
    return out;
  }
  const auto object = dsl::build(expr, {opts.engine.build, opts.base_dir});
  const auto& e = opts.engine;
  if (verb == "rank" || verb == "lrk") {
    const auto r = verb == "rank" ? rank(object, e) : local_rank(object, e);
    out.report = to_json(r);
    out.text = rank_text(r);
    if (r.partial) out.code = ExitCode::BudgetExhausted;
    const auto b = sandwich(r.rk, r.lrk);
    if (!b.holds) throw InvariantError("lrk <= rk <= lrk + 1 fails for " + r.object);
    return out;
  }
  if (verb == "classify") {
    const auto c = classify(object, e);
    out.report = to_json(c);
    out.text = classify_text(c);
    return out;
  }
  if (verb == "spectrum") {
    out.report = spectrum_json(object, e);
  } else if (verb == "ideals") {
    out.report = ideals_json(require_finite(object, verb), e);
    out.report["object"] = object.describe();
  } else if (verb == "mu") {
    if (!opts.gens) throw InputError("mu needs --gens");
    out.report = mu_json(object, *opts.gens);
    out.report["object"] = object.describe();
  } else if (verb == "decompose") {
    const auto& f = require_finite(object, verb);
    out.report = f.is_zero_ring() ? json{{"size", 1}, {"idempotents", json::array()}, {"factors", json::array()}}
                                  : decomposition_json(f, local_decompose(f, e.build));
    out.report["object"] = object.describe();
  } else if (verb == "hilbert") {
    out.report = hilbert_json(require_finite(object, verb), e);
    out.report["object"] = object.describe();
  } else if (verb == "poly-report") {
    const FiniteRing* base = object.as_finite();
    if (auto* p = object.as_poly()) base = p->base.get();
    if (!base) throw InputError("poly-report needs poly(A) or a finite ring A");
    const auto p = polynomial_report(*base, e);
    out.report = to_json(p);
    out.report["object"] = object.describe();
  } else {
    throw InputError("unknown command '" + verb + "'");
  }
  out.text = out.report.dump(2) + "\n";
  return out;
}

}  // namespace

CommandOutcome run_command(const std::string& verb, const std::string& ring, const CommandOptions& opts) {
  try {
    return dispatch(verb, ring, opts);
  } catch (const Error& err) {
    CommandOutcome out;
    out.code = err.exit_code();
    const char* status = err.exit_code() == ExitCode::InvariantBreach ? "invariant-breach"
                         : err.exit_code() == ExitCode::BudgetExhausted ? "budget-exhausted"
                                                                         : "input-error";
    out.report = {{"status", status}, {"error", err.what()}};
    out.text = std::string("error: ") + err.what() + "\n";
    return out;
  } catch (const std::filesystem::filesystem_error& err) {
    CommandOutcome out;
    out.code = ExitCode::InputError;
    out.report = {{"status", "input-error"}, {"error", err.what()}};
    out.text = std::string("error: ") + err.what() + "\n";
    return out;
  }
}

}  // namespace noethera::cli
