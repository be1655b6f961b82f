#include "cli.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "loopchar/cache.hpp"
#include "loopchar/closedform.hpp"
#include "loopchar/demazure.hpp"
#include "loopchar/localization.hpp"
#include "loopchar/serialize.hpp"
#include "loopchar/verify.hpp"

namespace loopchar {

namespace {

// Raised while converting option values; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto parse_arg(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Word parse_reduced_word(const std::string& text) {
  return parse_arg([&] {
    Word w = Word::parse(text);
    if (!w.is_reduced()) throw std::invalid_argument("word " + text + " is not reduced");
    return w;
  });
}

struct Outcome {
  std::string text;
  int code = 0;
};

struct Options {
  std::string format = "json";
  std::string cache_dir;
  int jobs = 0;

  std::string word, weight, element, alpha, method = "closed", suite = "all";
  std::int64_t m = 0, n = 0, order = 0;
  int level = 1;
  bool check = false;
};

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant localization data for the loop group of SU(2)", "loopchar"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--cache-dir", o.cache_dir, "Result cache directory (default: $LOOPCHAR_CACHE)");
  app.add_option("--jobs", o.jobs, "Worker threads for gallery sums and verification")
      ->check(CLI::PositiveNumber);
  app.fallthrough();

  const char* kWeightHelp = "Weight k,m,n meaning k*Lambda0 + m*alpha1 + n*delta";

  auto* weyl = app.add_subcommand("weyl", "Affine Weyl group operations");
  weyl->require_subcommand(1);
  auto* act_cmd = weyl->add_subcommand("act", "Apply a word to a weight");
  act_cmd->add_option("--word", o.word, "Word such as s0s1s0")->required();
  act_cmd->add_option("--weight", o.weight, kWeightHelp)->required();

  auto* gal = app.add_subcommand("galleries", "List the galleries of a reduced word");
  gal->add_option("--word", o.word, "Reduced word")->required();

  auto* bwv = app.add_subcommand("bwv", "Nil-Hecke coefficient b_{w,v}");
  bwv->add_option("--word", o.word, "Reduced word w")->required();
  bwv->add_option("--element", o.element, "v as eps,t or as a word")->required();

  auto* rational = app.add_subcommand("rational", "Coset rational function R_m(X_n)");
  rational->add_option("--m", o.m, "Coset index")->required()->check(CLI::NonNegativeNumber);
  rational->add_option("--n", o.n, "Chain length")->required()->check(CLI::NonNegativeNumber);
  rational->add_option("--method", o.method, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}))
      ->capture_default_str();
  rational->add_flag("--check", o.check, "Fail unless closed form and subword sum agree");

  auto* dem = app.add_subcommand("demazure", "Demazure module character");
  dem->add_option("--word", o.word, "Reduced word")->required();
  dem->add_option("--level", o.level, "Level k of k*Lambda0")->required()->check(CLI::PositiveNumber);

  auto* chr = app.add_subcommand("character", "Truncated localization character");
  chr->add_option("--word", o.word, "Reduced word")->required();
  chr->add_option("--level", o.level, "Level k of k*Lambda0")->required()->check(CLI::PositiveNumber);
  chr->add_option("--order", o.order, "Depth below the top weight")
      ->required()
      ->check(CLI::NonNegativeNumber);
  chr->add_flag("--check", o.check, "Fail unless it matches the Demazure character");

  auto* mult = app.add_subcommand("mult", "Weight multiplicity in the irreducible module");
  mult->add_option("--level", o.level, "Level k of k*Lambda0")->required()->check(CLI::PositiveNumber);
  mult->add_option("--alpha", o.alpha, kWeightHelp)->required();

  auto* lim = app.add_subcommand("limit", "Series of the limit of R_m(X_n) as n grows");
  lim->add_option("--m", o.m, "Coset index")->required()->check(CLI::NonNegativeNumber);
  lim->add_option("--order", o.order, "Delta-degree bound")->required()->check(CLI::NonNegativeNumber);

  auto* ver = app.add_subcommand("verify", "Run property suites");
  ver->add_option("--suite", o.suite, "weights, charalg, weyl, partitions, nilhecke, closedform, demazure or all")
      ->check(CLI::IsMember({"weights", "charalg", "weyl", "partitions", "nilhecke", "closedform",
                             "demazure", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (o.jobs > 0) omp_set_num_threads(o.jobs);
  const bool json = o.format == "json";

  // Each branch returns the command's cache key and a function producing its
  // output; verify is never cached.
  std::string key;
  std::function<Outcome()> compute;
  try {
    if (act_cmd->parsed()) {
      const Word w = parse_arg([&] { return Word::parse(o.word); });
      const Weight mu = parse_arg([&] { return parse_weight(o.weight); });
      key = "weyl-act " + w.str() + " " + to_text(mu);
      compute = [=] {
        const Weight r = act(w, mu);
        return Outcome{json ? dump(to_json(r)) : to_text(r) + "\n"};
      };
    } else if (gal->parsed()) {
      const Word w = parse_reduced_word(o.word);
      key = "galleries " + w.str();
      compute = [=] {
        Json arr = Json::array();
        std::ostringstream text;
        for (const Gallery& g : galleries(w)) {
          const auto v = realization(w, g);
          arr.push_back(Json{{"bits", g.str()},
                             {"realization", to_json(v)},
                             {"word", v.reduced_word().str()},
                             {"coset", coset_index(v)}});
          text << g.str() << ' ' << v.reduced_word().str() << " (" << v.str() << ") coset "
               << coset_index(v) << '\n';
        }
        return Outcome{json ? dump(arr) : text.str()};
      };
    } else if (bwv->parsed()) {
      const Word w = parse_reduced_word(o.word);
      const WeylElement v = parse_arg([&] { return WeylElement::parse(o.element); });
      key = "bwv " + w.str() + " " + v.str();
      compute = [=] {
        const auto r = b_coeff(w, v);
        return Outcome{json ? dump(to_json(r)) : to_text(r) + "\n"};
      };
    } else if (rational->parsed()) {
      if (o.m > o.n) throw UsageError("--m must not exceed --n");
      key = "rational " + std::to_string(o.m) + " " + std::to_string(o.n) + " " + o.method +
            (o.check ? " check" : "");
      compute = [o, json] {
        std::optional<FactoredRational> closed, oracle;
        if (o.method != "oracle" || o.check) closed = r_closed(o.m, o.n);
        if (o.method != "closed" || o.check)
          oracle = r_coset(chain_word(static_cast<std::size_t>(o.n)), static_cast<std::size_t>(o.m));
        const FactoredRational& shown = o.method == "oracle" ? *oracle : *closed;
        Outcome res{json ? dump(to_json(shown)) : to_text(shown) + "\n"};
        if (closed && oracle && !rat_equal(*closed, *oracle)) {
          if (o.method == "both" || o.check) res.code = 1;
        }
        return res;
      };
    } else if (dem->parsed()) {
      const Word w = parse_reduced_word(o.word);
      key = "demazure " + w.str() + " " + std::to_string(o.level);
      compute = [=, level = o.level] {
        const auto t = demazure_character(w, level);
        return Outcome{json ? dump(to_json(t)) : to_text(t.character) + "\n"};
      };
    } else if (chr->parsed()) {
      const Word w = parse_reduced_word(o.word);
      key = "character " + w.str() + " " + std::to_string(o.level) + " " + std::to_string(o.order) +
            (o.check ? " check" : "");
      compute = [=, level = o.level, order = o.order, check = o.check] {
        const auto ch = truncated_character(w, level, order);
        Outcome res{json ? dump(to_json(ch)) : to_text(ch) + "\n"};
        if (check && !(ch == demazure_character(w, level).depth_slice(order))) res.code = 1;
        return res;
      };
    } else if (mult->parsed()) {
      const Weight alpha = parse_arg([&] { return parse_weight(o.alpha); });
      key = "mult " + std::to_string(o.level) + " " + to_text(alpha);
      compute = [=, level = o.level] { return Outcome{kostant_mult(alpha, level).get_str() + "\n"}; };
    } else if (lim->parsed()) {
      key = "limit " + std::to_string(o.m) + " " + std::to_string(o.order);
      compute = [=, m = o.m, order = o.order] {
        const auto p = r_limit(m, order);
        return Outcome{json ? dump(to_json(p)) : to_text(p) + "\n"};
      };
    } else if (ver->parsed()) {
      compute = [suite = o.suite, json] {
        const auto reports = run_suite(suite);
        const bool ok = report_json(reports)["passed"].get<bool>();
        return Outcome{json ? dump(report_json(reports)) : report_text(reports), ok ? 0 : 1};
      };
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    std::optional<ResultCache> cache;
    if (!key.empty())
      cache = ResultCache::open(o.cache_dir.empty() ? std::nullopt : std::optional(o.cache_dir));
    const std::string full_key = key + " format=" + o.format;
    if (cache) {
      if (auto hit = cache->get(full_key)) {
        out << *hit;
        return 0;
      }
    }
    const Outcome res = compute();
    // Only successful results are memoized.
    if (cache && res.code == 0) cache->put(full_key, res.text);
    out << res.text;
    if (res.code != 0) err << "error: check failed\n";
    return res.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace loopchar
