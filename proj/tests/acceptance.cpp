// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "noethera/cli.hpp"
#include "noethera/isomorphism.hpp"
#include "noethera/rank_engine.hpp"
#include "oracles.hpp"

using namespace noethera;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

// Rings are built on demand; the largest products have 10^6-entry tables.
struct NamedRing {
  std::string name;
  std::size_t size;
  std::function<FiniteRing()> make;
};

std::vector<NamedRing> build_corpus() {
  std::vector<NamedRing> out;
  for (std::uint64_t n = 2; n <= 256; ++n)
    out.push_back({"Z/" + std::to_string(n), n, [n] { return make_zmod(n); }});
  for (std::uint64_t a = 2; a * a <= 1024; ++a)
    for (std::uint64_t b = a; a * b <= 1024; ++b)
      out.push_back({"Z/" + std::to_string(a) + " x Z/" + std::to_string(b), a * b, [a, b] {
                       const std::vector<FiniteRing> parts{make_zmod(a), make_zmod(b)};
                       return direct_product(parts);
                     }});
  for (auto& [name, r] : corpus::local_algebras()) out.push_back({name, r.size(), [r] { return r; }});
  return out;
}

// Matches two factor lists one to one: isomorphism search up to size 16,
// fingerprints above.
bool same_factors(std::vector<const FiniteRing*> a, std::vector<const FiniteRing*> b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto* x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j) {
      if (used[j] || b[j]->size() != x->size()) continue;
      const bool iso = x->size() <= 16 ? find_isomorphism(*x, *b[j]).has_value() : fingerprint(*x) == fingerprint(*b[j]);
      if (iso) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

std::vector<IdealSet> maximal_from_lattice(const FiniteRing& r) {
  const auto l = enumerate_ideals(r);
  std::vector<IdealSet> out;
  for (const auto& i : l.ideals()) {
    if (i.is_unit_ideal()) continue;
    bool maximal = true;
    for (const auto& j : l.ideals())
      if (!j.is_unit_ideal() && j.size() > i.size() && i.is_subset_of(j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::map<std::string, std::string> read_tree(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    out[e.path().filename().string()] = ss.str();
  }
  return out;
}

RingObject quad(std::int64_t d, bool maximal = true) { return RingObject::quadratic(make_order(d, maximal)); }

void report(const char* id, Outcome& o) {
  std::cout << id << " " << (o.pass ? "PASS" : "FAIL") << ": " << o.detail.str() << std::endl;
}

}  // namespace

int main() {
  bool all = true;
  EngineOptions engine;

  // AC1: rk = lrk on the generated Artinian corpus.
  std::vector<NamedRing> rings;
  std::vector<RankReport> reports;
  {
    Outcome o;
    const auto t0 = Clock::now();
    rings = build_corpus();
    std::size_t locals = 0;
    for (const auto& r : rings) {
      try {
        const FiniteRing ring = r.make();
        if (ring.size() <= 64 && is_local(ring) && r.name.rfind("Z/", 0) != 0) ++locals;
        reports.push_back(rank(RingObject::finite(ring), engine));
        const auto& rep = reports.back();
        if (!rep.rk.is_exact() || !rep.lrk.is_exact() || rep.rk != rep.lrk)
          o.fail(r.name + " has rk " + rep.rk.text() + ", lrk " + rep.lrk.text());
      } catch (const std::exception& e) {
        reports.emplace_back();
        o.fail(r.name + ": " + e.what());
      }
    }
    const double secs = seconds_since(t0);
    if (locals < 10) o.fail("only " + std::to_string(locals) + " local structure-constant algebras");
    if (secs > 120) o.fail("took " + std::to_string(secs) + " s");
    o.detail << rings.size() << " rings (" << locals << " local algebras), rk = lrk on all, " << secs << " s";
    report("AC1", o);
    all = all && o.pass;
  }

  // AC2: Nakayama mu equals brute-force mu for every ideal of every ring up to 64 elements.
  {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t ideals = 0, checked_rings = 0;
    for (const auto& r : rings) {
      if (r.size > 64) continue;
      ++checked_rings;
      try {
        const FiniteRing ring = r.make();
        const auto dec = local_decompose(ring);
        for (const auto lat = enumerate_ideals(ring); const auto& i : lat.ideals()) {
          ++ideals;
          const auto a = mu(ring, dec, i).count();
          const auto b = mu_bruteforce(ring, i).count();
          if (a != b) o.fail(r.name + ": Nakayama " + std::to_string(a) + " vs brute force " + std::to_string(b));
        }
        for (const auto& f : dec.factors)
          for (const auto lat = enumerate_ideals(f.ring); const auto& i : lat.ideals()) {
            ++ideals;
            if (mu_nakayama(f, i).count() != mu_bruteforce(f.ring, i).count())
              o.fail(r.name + ": local factor disagreement");
          }
      } catch (const std::exception& e) {
        o.fail(r.name + ": " + e.what());
      }
    }
    const double secs = seconds_since(t0);
    if (secs > 300) o.fail("took " + std::to_string(secs) + " s");
    o.detail << checked_rings << " rings, " << ideals << " ideals compared, " << secs << " s";
    report("AC2", o);
    all = all && o.pass;
  }

  // AC3: lrk <= rk <= lrk + 1 on every object.
  {
    Outcome o;
    std::size_t objects = 0;
    for (std::size_t i = 0; i < rings.size(); ++i) {
      ++objects;
      const auto b = sandwich(reports[i].rk, reports[i].lrk);
      if (!b.holds) o.fail(rings[i].name);
    }
    std::vector<RingObject> extra;
    for (std::int64_t d : {-1, -2, -3, -5, -6, -7, -10, -11, -13, -14, -15, -17, -19, -21, -23, -26, -31, -47})
      extra.push_back(quad(d));
    for (std::int64_t d : {-3, -7, -11, -15, -23}) extra.push_back(quad(d, false));
    extra.push_back(RingObject::product({RingObject::finite(make_zmod(8)), quad(-5)}));
    extra.push_back(RingObject::product({RingObject::finite(make_zmod(9)), quad(-3, false)}));
    extra.push_back(RingObject::product({RingObject::finite(corpus::square_zero(2, 2)), quad(-23)}));
    extra.push_back(RingObject::product({quad(-1), quad(-5), RingObject::finite(make_zmod(12))}));
    for (auto* base : {"Z/4", "Z/6", "F3", "F2[x]/(x^2)", "F2[x,y]/(x,y)^2"}) {
      const std::string b = base;
      FiniteRing a = b == "Z/4"   ? make_zmod(4)
                     : b == "Z/6" ? make_zmod(6)
                     : b == "F3"  ? make_zmod(3)
                     : b == "F2[x]/(x^2)" ? corpus::truncated_line(2, 2)
                                          : corpus::square_zero(2, 2);
      extra.push_back(RingObject::poly(a));
    }
    extra.push_back(RingObject::product({RingObject::poly(make_zmod(4)), quad(-5)}));
    for (const auto& obj : extra) {
      ++objects;
      try {
        if (!check_bounds(obj, engine).holds) o.fail(obj.describe());
      } catch (const std::exception& e) {
        o.fail(obj.describe() + ": " + e.what());
      }
    }
    o.detail << objects << " objects";
    report("AC3", o);
    all = all && o.pass;
  }

  // AC4: the classification theorem on its named instances.
  {
    Outcome o;
    struct Case {
      RingObject object;
      std::optional<std::size_t> rk, lrk;
      bool of_local_rank;
      std::vector<ComponentTag> tags;
    };
    std::vector<Case> cases;
    cases.push_back({quad(-5), 2, 1, false, {ComponentTag::DedekindNonPrincipal}});
    cases.push_back({quad(-1), 1, 1, true, {ComponentTag::DedekindPrincipal}});
    cases.push_back({RingObject::product({RingObject::finite(make_zmod(8)), quad(-5)}),
                     2,
                     1,
                     false,
                     {ComponentTag::LocalPrincipalArtinian, ComponentTag::DedekindNonPrincipal}});
    const std::vector<FiniteRing> parts{make_zmod(8), make_zmod(9)};
    cases.push_back({RingObject::finite(direct_product(parts)), std::nullopt, std::nullopt, true, {}});
    for (const auto& c : cases) {
      try {
        const auto cl = classify(c.object, engine);
        const std::string name = c.object.describe();
        if (cl.of_local_rank != c.of_local_rank) o.fail(name + " verdict");
        if (!cl.numeric_of_local_rank || *cl.numeric_of_local_rank != cl.structural_of_local_rank)
          o.fail(name + " structural and numeric verdicts differ");
        if (c.rk && cl.rk != RankValue::exact(*c.rk)) o.fail(name + " rk " + cl.rk.text());
        if (c.lrk && cl.lrk != RankValue::exact(*c.lrk)) o.fail(name + " lrk " + cl.lrk.text());
        if (!c.tags.empty()) {
          std::vector<ComponentTag> tags;
          for (const auto& t : cl.components) tags.push_back(t.tag);
          if (tags != c.tags) o.fail(name + " component tags");
        }
        o.detail << name << " -> " << (cl.of_local_rank ? "of-local-rank" : "not-of-local-rank") << " (rk "
                 << cl.rk.text() << ", lrk " << cl.lrk.text() << "); ";
      } catch (const std::exception& e) {
        o.fail(e.what());
      }
    }
    report("AC4", o);
    all = all && o.pass;
  }

  // AC5: the non-maximal order Z[sqrt(-3)].
  {
    Outcome o;
    try {
      const auto order = make_order(-3, false);
      const auto r = rank(RingObject::quadratic(order), engine);
      const auto c = classify(RingObject::quadratic(order), engine);
      const std::vector<QuadElement> g{{2, 0}, {1, 1}};
      const auto m = ideal_from_generators(order, g);
      const auto lm = local_mu(order, m, m);
      if (lm != 2) o.fail("local mu at (2, 1+sqrt(-3)) is " + std::to_string(lm));
      if (r.rk != RankValue::exact(2)) o.fail("rk " + r.rk.text());
      if (r.lrk != RankValue::exact(2)) o.fail("lrk " + r.lrk.text());
      if (!r.lrk_witness || r.lrk_witness->maximal_ideal != "(2, 1+sqrt(-3))") o.fail("lrk witness");
      if (!c.of_local_rank) o.fail("verdict");
      o.detail << "rk " << r.rk.text() << ", lrk " << r.lrk.text() << ", local mu at (2, 1+sqrt(-3)) = " << lm
               << ", " << (c.of_local_rank ? "of-local-rank" : "not-of-local-rank");
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    report("AC5", o);
    all = all && o.pass;
  }

  // AC6: truncation family F2[x,y]/(xy, y^2, x^n).
  {
    Outcome o;
    const auto t0 = Clock::now();
    for (unsigned n = 2; n <= 8; ++n) {
      try {
        const auto r = corpus::truncation(n);
        const Elem y = static_cast<Elem>(1u << n);
        const auto i = principal_ideal(r, y);
        const auto mu_y = mu_nakayama(r, i).count();
        const auto rep = rank(RingObject::finite(r), engine);
        const auto q = quotient(r, i);
        const auto h = hilbert_function(q.ring, n + 1);
        const std::size_t e = h.stabilized ? h.stabilized->value : 0;
        const std::size_t rk = rep.rk.is_exact() ? rep.rk.lo : 0;
        if (mu_y != 1 || rk != 2 || !(mu_y < rk) || mu_y + e != 2 || mu_y + e > rk)
          o.fail("n = " + std::to_string(n) + ": mu " + std::to_string(mu_y) + ", e " + std::to_string(e) + ", rk " +
                 rep.rk.text());
      } catch (const std::exception& e) {
        o.fail(e.what());
      }
    }
    const double secs = seconds_since(t0);
    if (secs > 60) o.fail("took " + std::to_string(secs) + " s");
    o.detail << "n = 2..8: mu((y)) = 1, stabilized H = 1, rk = 2; " << secs << " s";
    report("AC6", o);
    all = all && o.pass;
  }

  // AC7: local factors equal localizations, and survive relabelling.
  {
    Outcome o;
    std::mt19937_64 rng(7);
    std::size_t factors = 0;
    for (const auto& r : rings) {
      try {
        const FiniteRing ring = r.make();
        const auto dec = local_decompose(ring);
        std::vector<const FiniteRing*> mine;
        for (const auto& f : dec.factors) mine.push_back(&f.ring);

        // R_m = R / {x : s x = 0 for some s outside m}.
        std::vector<FiniteRing> locs;
        for (const auto& m : maximal_from_lattice(ring)) {
          const auto ker = oracle::localization_kernel(ring, m.elements());
          ElementSet bits(ring.size());
          for (Elem e = 0; e < ring.size(); ++e)
            if (ker[e]) bits.set(e);
          locs.push_back(quotient(ring, IdealSet::from_members(ring, bits)).ring);
        }
        std::vector<const FiniteRing*> theirs;
        for (const auto& l : locs) theirs.push_back(&l);
        if (!same_factors(mine, theirs)) o.fail(r.name + ": factors differ from localizations");

        std::vector<Elem> perm(ring.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto relabelled = relabel(ring, perm);
        const auto dec2 = local_decompose(relabelled);
        std::vector<const FiniteRing*> again;
        for (const auto& f : dec2.factors) again.push_back(&f.ring);
        if (!same_factors(mine, again)) o.fail(r.name + ": relabelled factors differ");
        factors += mine.size();
      } catch (const std::exception& e) {
        o.fail(r.name + ": " + e.what());
      }
    }
    o.detail << rings.size() << " rings, " << factors << " local factors matched";
    report("AC7", o);
    all = all && o.pass;
  }

  // AC8: class numbers, cross-checked with principality of prime ideals up to 50.
  {
    Outcome o;
    for (auto [d, h_expected] : std::vector<std::pair<std::int64_t, std::size_t>>{{-5, 2}, {-1, 1}, {-23, 3}}) {
      try {
        const auto order = make_order(d, true);
        const auto h = class_number(order).class_number;
        if (h != h_expected) o.fail("h(" + std::to_string(order.discriminant()) + ") = " + std::to_string(h));
        std::vector<QOIdeal> classes{unit_ideal()};
        bool non_principal = false;
        for (std::uint64_t p = 2; p <= 50; ++p) {
          if (!is_prime(p)) continue;
          for (const auto& f : factor_prime(order, p).factors) {
            if (!is_principal(order, f.ideal)) non_principal = true;
            bool seen = false;
            for (const auto& c : classes)
              if (is_principal(order, ideal_product(order, f.ideal, ideal_conjugate(order, c)))) seen = true;
            if (!seen) classes.push_back(f.ideal);
          }
        }
        if (non_principal != (h > 1)) o.fail("principality disagrees with h for d = " + std::to_string(d));
        if (classes.size() != h) o.fail("prime ideals up to 50 fall into " + std::to_string(classes.size()) + " classes");
        o.detail << "h(" << order.discriminant() << ") = " << h << " (" << classes.size() << " classes among primes <= 50); ";
      } catch (const std::exception& e) {
        o.fail(e.what());
      }
    }
    report("AC8", o);
    all = all && o.pass;
  }

  // AC9: polynomial reports.
  {
    Outcome o;
    const std::vector<std::pair<std::string, FiniteRing>> bases{{"Z/4", make_zmod(4)},
                                                                {"Z/6", make_zmod(6)},
                                                                {"F3", make_zmod(3)},
                                                                {"F2[x]/(x^2)", corpus::truncated_line(2, 2)}};
    for (const auto& [name, base] : bases) {
      try {
        const auto p = polynomial_report(base, engine);
        if (!p.classification.of_local_rank) o.fail(name + " verdict");
        if (!p.reduced_is_product_of_fields) o.fail(name + " reduced part");
        for (const auto& f : p.field_factors)
          if (!f.all_principal || f.samples == 0) o.fail(name + " field factor");
        if (p.rk.hi > p.length) o.fail(name + " rank above the length bound");
        o.detail << name << ": length " << p.length << ", rk " << p.rk.text() << "; ";
        if (name == "Z/4" && p.length != 2) o.fail("length(Z/4) = " + std::to_string(p.length));
      } catch (const std::exception& e) {
        o.fail(name + ": " + e.what());
      }
    }
    report("AC9", o);
    all = all && o.pass;
  }

  // AC10: corpus reports do not depend on the worker count.
  {
    Outcome o;
    try {
      const auto dir = fs::temp_directory_path() / "noethera-acceptance";
      fs::remove_all(dir);
      auto m = cli::load_manifest(fs::path(NOETHERA_DATA_DIR) / "sample_manifest.json");
      m.budget_seconds = 0;
      for (const char* ring : {"Z/360", "product(Z/16, Z/27)", "product(Z/4, Z[sqrt(-23)])", "Z[sqrt(-7)]",
                               "poly(Z/6)", "quot(Z/64; 16)", "O(-47)", "Z/0"}) {
        cli::ManifestEntry e{std::string("extra_") + std::to_string(m.entries.size()), ring, {"rank", "classify"}, {}};
        m.entries.push_back(e);
      }
      std::map<std::string, std::string> first;
      std::size_t files = 0;
      for (unsigned threads : {1u, 8u}) {
        m.output_dir = dir / ("w" + std::to_string(threads));
        cli::run_corpus(m, threads, engine);
        const auto tree = read_tree(m.output_dir);
        if (first.empty()) {
          first = tree;
          files = tree.size();
        } else if (tree != first) {
          o.fail("reports differ between 1 and 8 workers");
        }
      }
      fs::remove_all(dir);
      o.detail << files << " files byte-identical at 1 and 8 workers";
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    report("AC10", o);
    all = all && o.pass;
  }

  return all ? 0 : 1;
}
