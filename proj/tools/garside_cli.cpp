// garside: command-line front end for normal forms, parabolics, absorbable
// decompositions, local pieces of the additional length graph, growth and
// bounded free-product certification.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "garside.hpp"

using namespace garside;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, dot };

struct Common {
  std::string format = "text";
  int threads = 0;
};

Format format_of(const std::string& f, bool allow_dot) {
  if (f == "json") return Format::json;
  if (f == "dot") {
    if (!allow_dot) throw Usage("--format dot is only available for cal-ball");
    return Format::dot;
  }
  return Format::text;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

GroupElement element(const Garside& g, const std::string& word) { return g.normalize(AtomWord::parse(word)); }

Side side_of(const std::string& s) { return s == "left" ? Side::left : Side::right; }

Json chain_json(const Garside& g, const RibbonChain& c) {
  Json factors = Json::array(), sets = Json::array();
  for (const auto& f : c.factors) factors.push_back(to_json(g, f));
  for (AtomSet s : c.sets) sets.push_back(atom_set_json(s));
  return Json{{"factors", factors}, {"sets", sets}, {"value", to_json(g, c.value)}};
}

std::string ribbon_text(const Garside& g, const RibbonFactor& r) {
  std::ostringstream out;
  out << "r[" << r.source.to_string() << ", " << r.atom << ", " << (r.side == Side::left ? "left" : "right")
      << "] = " << g.to_text(r.value) << "  ->  " << r.target.to_string();
  return out.str();
}

void print_decomposition(const Garside& g, const AbsorbableDecomposition& d, Format f) {
  if (f == Format::json) return emit(to_json(g, d));
  std::cout << "target   " << g.to_text(d.target) << "\n";
  for (std::size_t i = 0; i < d.factors.size(); ++i)
    std::cout << "factor " << i + 1 << " " << g.to_text(d.factors[i]) << "   absorbed by "
              << g.to_text(d.certificates[i].absorber) << "\n";
  std::cout << "factors  " << d.size() << " (budget " << d.budget << ")\n";
  std::cout << "verified " << (check_decomposition(g, d) ? "true" : "false") << "\n";
}

void print_certificate(const Garside& g, const FreeProductCertificate& c) {
  std::cout << "X " << c.x.to_string() << "  g " << g.to_text(c.g) << "  L=" << c.syllable_depth
            << " R=" << c.parabolic_radius << " E=" << c.exponent_bound << "\n";
  std::cout << "  parabolic elements " << c.parabolic_elements << ", half words " << c.half_words << "\n";
  if (c.verified) {
    std::cout << "  verified: no trivial reduced word\n";
    return;
  }
  std::cout << "  rejected, trivial word:";
  for (const auto& s : *c.witness) {
    if (s.is_power)
      std::cout << " [g^" << s.exponent << "]";
    else
      std::cout << " [" << g.to_text(s.t) << "]";
  }
  std::cout << "\n  witness re-evaluates to 1: " << (c.witness_reevaluated ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside normal forms and the additional length graph of spherical Artin groups"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--threads", common.threads, "Worker threads (default: GARSIDE_THREADS or 1)")
      ->check(CLI::NonNegativeNumber);

  std::string sys_spec, word_a, word_b, op = "meet", order = "prefix", side = "right", set_text, u_word, x_word,
                                         g_word, mode = "monoid", decompose, pool_text, center_word;
  int atom = 0, k = 1, radius = 1, horizon = 8, L = 4, R = 2, E = 3, len_bound = TheoremConstants::g_length_bound,
      search_radius = 2;
  long long kappa = 0;
  bool kappa_set = false;

  auto sys_arg = [&](CLI::App* c) { c->add_option("system", sys_spec, "System, e.g. A3, B4, E8, I2(7)")->required(); };
  auto fmt = [&](CLI::App* c) {
    c->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  };

  auto* nf = app.add_subcommand("nf", "Left normal form of a word");
  sys_arg(nf);
  nf->add_option("word", word_a, "Atoms i or -i, space separated")->required();
  fmt(nf);

  auto* lat = app.add_subcommand("lattice", "Meet or join of two positive elements");
  sys_arg(lat);
  lat->add_option("a", word_a)->required();
  lat->add_option("b", word_b)->required();
  lat->add_option("--op", op)->check(CLI::IsMember({"meet", "join"}))->capture_default_str();
  lat->add_option("--side", order, "prefix or suffix order")
      ->check(CLI::IsMember({"prefix", "suffix"}))
      ->capture_default_str();
  fmt(lat);

  auto* rib = app.add_subcommand("ribbon", "Ribbon r_{X,t} or r_{t,X}");
  sys_arg(rib);
  rib->add_option("--x", set_text, "Atom set, e.g. 1,3")->required();
  rib->add_option("--t", atom, "Atom outside X")->required();
  rib->add_option("--side", side, "left: r_{X,t}, right: r_{t,X}")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  fmt(rib);

  auto* fc = app.add_subcommand("factor-conj", "Factor a positive conjugator into a parabolic part and ribbons");
  sys_arg(fc);
  fc->add_option("--u", u_word, "Positive word; its support is X")->required();
  fc->add_option("--x", x_word, "Positive conjugator")->required();
  fmt(fc);

  auto* ab = app.add_subcommand("absorb", "Decomposition into absorbable factors");
  sys_arg(ab);
  ab->add_option("--decompose", decompose)
      ->check(CLI::IsMember({"delta", "delta^k", "sub-delta", "parabolic", "conjugator", "normalizer"}))
      ->required();
  ab->add_option("--k", k, "Exponent for delta^k and sub-delta")->capture_default_str();
  ab->add_option("--x", set_text, "Atom set X");
  ab->add_option("--g", g_word, "Element (parabolic, normalizer) or conjugator (conjugator)");
  ab->add_option("--u", u_word, "Positive element of A_X (conjugator)");
  fmt(ab);

  auto* cb = app.add_subcommand("cal-ball", "Ball in the additional length graph");
  sys_arg(cb);
  cb->add_option("--radius", radius)->check(CLI::NonNegativeNumber)->capture_default_str();
  cb->add_option("--pool", pool_text, "Absorbable elements, words separated by ';'");
  cb->add_option("--center", center_word, "Word whose class is the center");
  cb->add_option("--search-radius", search_radius, "Absorber search depth for pool certificates")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  fmt(cb);

  auto* gr = app.add_subcommand("growth", "Ball sizes and growth rate for the Garside generators");
  sys_arg(gr);
  gr->add_option("--horizon", horizon)->check(CLI::NonNegativeNumber)->capture_default_str();
  gr->add_option("--mode", mode)->check(CLI::IsMember({"monoid", "group"}))->capture_default_str();
  fmt(gr);

  auto* fp = app.add_subcommand("freeprod", "Bounded free-product certification");
  sys_arg(fp);
  fp->add_option("--x", set_text, "Proper atom set X");
  fp->add_option("--g", g_word, "Candidate word; searched for when absent");
  fp->add_option("--L", L, "Syllable depth")->check(CLI::PositiveNumber)->capture_default_str();
  fp->add_option("--R", R, "Parabolic ball radius")->check(CLI::NonNegativeNumber)->capture_default_str();
  fp->add_option("--E", E, "Exponent bound")->check(CLI::PositiveNumber)->capture_default_str();
  fp->add_option("--len-bound", len_bound, "Garside length bound for the search")->capture_default_str();
  fmt(fp);

  auto* cs = app.add_subcommand("constants", "Hyperbolicity and WPD constants");
  cs->add_option("--kappa", kappa, "Evaluate N and F at kappa")->each([&](const std::string&) { kappa_set = true; });
  fmt(cs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (common.threads > 0) detail::set_thread_count(common.threads);
    CLI::App* sub = app.get_subcommands().front();
    const Format f = format_of(common.format, sub == cb);

    if (sub == cs) {
      using C = TheoremConstants;
      if (f == Format::json) {
        Json j{{"delta", C::delta},
               {"g_length_bound", C::g_length_bound},
               {"orbit_bound_parabolic", C::orbit_bound_parabolic},
               {"orbit_bound_normalizer", C::orbit_bound_normalizer},
               {"N", "4*kappa+319"},
               {"F", "8*kappa+638"}};
        if (kappa_set) j["at"] = Json{{"kappa", kappa}, {"N", C::N(kappa)}, {"F", C::F(kappa)}};
        emit(j);
      } else {
        std::cout << "delta = " << C::delta << "\n"
                  << "g length bound = " << C::g_length_bound << "\n"
                  << "orbit bound (parabolic) = " << C::orbit_bound_parabolic << "\n"
                  << "orbit bound (normalizer) = " << C::orbit_bound_normalizer << "\n"
                  << "N(kappa) = 4*kappa+319\n"
                  << "F(kappa) = 8*kappa+638\n";
        if (kappa_set) std::cout << "N(" << kappa << ") = " << C::N(kappa) << ", F(" << kappa << ") = " << C::F(kappa) << "\n";
      }
      return 0;
    }

    const Garside g(parse_system(sys_spec));

    if (sub == nf) {
      const GroupElement x = element(g, word_a);
      if (f == Format::json)
        emit(to_json(g, x));
      else
        std::cout << g.to_text(x) << "\n";
    } else if (sub == lat) {
      const GroupElement a = element(g, word_a), b = element(g, word_b);
      const Order o = order == "prefix" ? Order::prefix : Order::suffix;
      const GroupElement r = op == "meet" ? g.meet(a, b, o) : g.join(a, b, o);
      if (f == Format::json)
        emit(Json{{"op", op}, {"side", order}, {"result", to_json(g, r)}});
      else
        std::cout << g.to_text(r) << "\n";
    } else if (sub == rib) {
      const RibbonFactor r = ribbon(g, parse_atom_set(set_text), atom, side_of(side));
      if (f == Format::json)
        emit(to_json(g, r));
      else
        std::cout << ribbon_text(g, r) << "\n";
    } else if (sub == fc) {
      const GroupElement u = element(g, u_word), x = element(g, x_word);
      const MinimalConjugator m = minimal_conjugator(g, u, x);
      const ConjugatorFactorization c = factor_conjugator(g, u, x);
      if (f == Format::json) {
        emit(Json{{"minimal", {{"c", to_json(g, m.c)},
                               {"kind", m.kind == ConjugatorKind::in_parabolic ? "in_parabolic" : "ribbon"},
                               {"ribbon_atom", m.kind == ConjugatorKind::ribbon ? Json(m.ribbon_atom) : Json(nullptr)}}},
                  {"alpha", to_json(g, c.alpha)},
                  {"beta", chain_json(g, c.beta)}});
      } else {
        std::cout << "minimal conjugator " << g.to_text(m.c) << " ("
                  << (m.kind == ConjugatorKind::in_parabolic ? "in A_X" : "ribbon, atom " + std::to_string(m.ribbon_atom))
                  << ")\n";
        std::cout << "alpha " << g.to_text(c.alpha) << "\n";
        for (const auto& r : c.beta.factors) std::cout << "beta  " << ribbon_text(g, r) << "\n";
        std::cout << "beta value " << g.to_text(c.beta.value) << "\n";
      }
    } else if (sub == ab) {
      auto need = [&](const std::string& v, const char* flag) {
        if (v.empty()) throw Usage(std::string("--decompose ") + decompose + " needs " + flag);
      };
      AbsorbableDecomposition d;
      if (decompose == "delta") {
        d = decompose_delta_power(g, 1);
      } else if (decompose == "delta^k") {
        d = decompose_delta_power(g, k);
      } else if (decompose == "sub-delta") {
        need(set_text, "--x");
        d = decompose_sub_delta_power(g, parse_atom_set(set_text), k);
      } else if (decompose == "parabolic") {
        need(set_text, "--x");
        d = decompose_parabolic(g, element(g, g_word), parse_atom_set(set_text));
      } else if (decompose == "conjugator") {
        need(u_word, "--u");
        need(g_word, "--g");
        d = decompose_positive_conjugator(g, element(g, u_word), element(g, g_word));
      } else {
        need(set_text, "--x");
        d = decompose_normalizer(g, element(g, g_word), parse_atom_set(set_text));
      }
      print_decomposition(g, d, f);
    } else if (sub == cb) {
      std::vector<GroupElement> elems;
      std::istringstream in(pool_text);
      std::string w;
      while (std::getline(in, w, ';'))
        if (w.find_first_not_of(" \t") != std::string::npos) elems.push_back(element(g, w));
      const AbsorbablePool pool = make_pool(g, elems, search_radius);
      const CalBall b = ball(g, vertex_of(g, element(g, center_word)), radius, pool);
      if (f == Format::json) {
        emit(ball_to_json(g, b));
      } else if (f == Format::dot) {
        std::cout << ball_to_dot(g, b);
      } else {
        std::cout << "ball of radius " << b.radius << " around " << g.to_text(b.center.rep) << ": "
                  << b.vertices.size() << " vertices, " << b.edges.size() << " edges"
                  << (b.complete ? "" : " (incomplete)") << "\n";
        for (std::size_t i = 0; i < b.vertices.size(); ++i)
          std::cout << "  n" << i << " d=" << b.distance[i] << "  " << g.to_text(b.vertices[i].rep) << "\n";
        for (const auto& e : b.edges)
          std::cout << "  n" << e.from << " -- n" << e.to << "  " << edge_kind_name(e.kind) << "  "
                    << g.to_text(e.label) << "\n";
      }
    } else if (sub == gr) {
      const GrowthReport r = growth_report(g, horizon, mode == "monoid" ? GrowthMode::monoid : GrowthMode::group);
      if (f == Format::json)
        emit(to_json(r));
      else
        std::cout << growth_table(r);
    } else if (sub == fp) {
      if (!g_word.empty()) {
        if (set_text.empty()) throw Usage("freeprod --g needs --x");
        const FreeProductCertificate c = verify_free_product(g, parse_atom_set(set_text), element(g, g_word), L, R, E);
        if (f == Format::json)
          emit(to_json(g, c));
        else
          print_certificate(g, c);
      } else {
        const CandidateSearch s = search_candidate(g, len_bound, L, R, E);
        std::vector<AtomSet> targets;
        if (!set_text.empty())
          targets.push_back(parse_atom_set(set_text));
        else
          for (int a = 1; a <= g.system().rank() && g.system().rank() > 1; ++a)
            targets.push_back(g.atoms() - AtomSet::single(a));
        std::vector<FreeProductCertificate> certs;
        if (s.candidate)
          for (AtomSet x : targets) certs.push_back(verify_free_product(g, x, *s.candidate, L, R, E));
        if (f == Format::json) {
          Json cj = Json::array();
          for (const auto& c : certs) cj.push_back(to_json(g, c));
          emit(Json{{"system", g.system().name()},
                    {"len_bound", len_bound},
                    {"tested", s.tested},
                    {"candidate", s.candidate ? to_json(g, *s.candidate) : Json(nullptr)},
                    {"certificates", cj}});
        } else {
          std::cout << "tested " << s.tested << " candidates\n";
          if (!s.candidate) {
            std::cout << "no candidate found within length " << len_bound << "\n";
          } else {
            std::cout << "candidate " << g.to_text(*s.candidate) << "\n";
            for (const auto& c : certs) print_certificate(g, c);
          }
        }
      }
    }
    return 0;
  } catch (const Usage& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    emit(Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}});
    return 1;
  } catch (const std::exception& e) {
    emit(Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}});
    return 1;
  }
}
