// dp3: build, count, sample, zpoly, render, verify.
#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <dp3/dp3.hpp>

namespace fs = std::filesystem;
using namespace dp3;

namespace {

// Relative output paths land under $DP3_OUTPUT_DIR when it is set.
fs::path output_path(const std::string& name) {
  fs::path p(name);
  if (p.is_relative())
    if (const char* dir = std::getenv("DP3_OUTPUT_DIR"); dir && *dir) {
      fs::create_directories(dir);
      p = fs::path(dir) / p;
    }
  return p;
}

void write_text(const std::string& target, const std::string& text) {
  if (target.empty() || target == "-") {
    std::cout << text;
    return;
  }
  auto p = output_path(target);
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
  std::cerr << "wrote " << p.string() << "\n";
}

std::string read_input(const std::string& src) {
  std::ostringstream ss;
  if (src.empty() || src == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(src, std::ios::binary);
    if (!f) throw DomainError("cannot read " + src);
    ss << f.rdbuf();
  }
  return ss.str();
}

std::array<BigInt, 3> parse_point(const std::string& s) {
  std::array<BigInt, 3> v;
  std::stringstream ss(s);
  std::string part;
  int k = 0;
  while (std::getline(ss, part, ',')) {
    if (k == 3) throw DomainError("--at expects three integers a,b,c");
    try {
      v[k++] = BigInt(part);
    } catch (const std::exception&) {
      throw DomainError("--at expects integers, got '" + part + "'");
    }
  }
  if (k != 3) throw DomainError("--at expects three integers a,b,c");
  return v;
}

std::string rational_str(const BigRational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return denominator(r) == 1 ? numerator(r).str() : numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aztec diamonds on the dP3 lattice: construction, counting, domino shuffling"};
  app.require_subcommand(1);

  std::string order_s = "1", method = "all", out, trace, input, at, fill = "orientation";
  std::uint64_t seed = 0;
  double scale = 24.0;
  bool no_graph = false, no_matching = false, kites = false, heights = false;

  auto* build = app.add_subcommand("build", "Emit the diamond D_m as JSON");
  build->add_option("--order,-m", order_s, "Order m (e.g. 3, 2.5, 5/2)")->required();
  build->add_option("--output,-o", out, "Output file (default stdout)");

  auto* count = app.add_subcommand("count", "Count perfect matchings of D_m");
  count->add_option("--order,-m", order_s, "Order m")->required();
  count->add_option("--method", method, "formula | brute | kasteleyn | all")
      ->check(CLI::IsMember({"formula", "brute", "kasteleyn", "all"}));

  auto* samp = app.add_subcommand("sample", "Uniform random perfect matching by domino shuffling");
  samp->add_option("--order,-m", order_s, "Order m")->required();
  samp->add_option("--seed,-s", seed, "64-bit seed");
  samp->add_option("--trace", trace, "Write per-step JSON lines here ('-' for stderr)");
  samp->add_flag("--heights", heights, "Include the height function");
  samp->add_option("--output,-o", out, "Output file (default stdout)");

  auto* zp = app.add_subcommand("zpoly", "Generating function Z_m(a,b,c)");
  zp->add_option("--order,-m", order_s, "Order m")->required();
  zp->add_option("--at", at, "Evaluate at integers a,b,c");

  auto* rend = app.add_subcommand("render", "Draw a diamond or a matching as SVG 1.1");
  auto* rorder = rend->add_option("--order,-m", order_s, "Draw the bare diamond of this order");
  rend->add_option("--input,-i", input, "Matching JSON file (default stdin)")->excludes(rorder);
  rend->add_option("--output,-o", out, "SVG file ('-' for stdout; default dp3_<order>.svg)");
  rend->add_option("--scale", scale, "Pixels per unit length")->check(CLI::PositiveNumber);
  rend->add_option("--fill", fill, "none | orientation | height")
      ->check(CLI::IsMember({"none", "orientation", "height"}));
  rend->add_flag("--no-graph", no_graph, "Omit unmatched edges");
  rend->add_flag("--no-matching", no_matching, "Omit matched edges");
  rend->add_flag("--kites", kites, "Circle the kites of the next shuffle");

  auto* ver = app.add_subcommand("verify", "Run the invariant suite up to an order");
  std::string max_order_s = "2.5";
  ver->add_option("--max-order", max_order_s, "Largest order checked")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build) {
      write_text(out, diamond_to_json(build_diamond(Order::parse(order_s))).dump() + "\n");
    } else if (*count) {
      Order m = Order::parse(order_s);
      auto d = make_diamond(m);
      json results = json::array();
      std::vector<BigInt> seen;
      auto add = [&](const char* name, const BigInt& c) {
        results.push_back({{"order", m.str()}, {"method", name}, {"count", c.str()}});
        seen.push_back(c);
      };
      if (method == "formula" || method == "all") add("closed_form", count_formula(m));
      if (method == "brute" || method == "all") add("backtracking", brute_force_count(d));
      if (method == "kasteleyn" || method == "all") {
        auto k = kasteleyn_count(*d);
        if (!k.balanced) std::cerr << "graph is not balanced\n";
        add("kasteleyn", k.count);
      }
      bool agree = std::all_of(seen.begin(), seen.end(), [&](const BigInt& c) { return c == seen.front(); });
      json doc = results.size() == 1 ? results[0] : json{{"order", m.str()}, {"results", results}, {"agree", agree}};
      std::cout << doc.dump() << "\n";
      return agree ? 0 : 1;
    } else if (*samp) {
      Order m = Order::parse(order_s);
      std::ofstream tf;
      std::ostream* ts = nullptr;
      if (trace == "-") ts = &std::cerr;
      else if (!trace.empty()) {
        tf.open(output_path(trace));
        if (!tf) throw std::runtime_error("cannot write trace file");
        ts = &tf;
      }
      TraceSink sink;
      if (ts) sink = [&](const ShuffleTrace& t) { *ts << trace_to_json(t).dump() << "\n"; };
      Matching mm = sample(m, seed, sink);
      json doc = matching_to_json(mm);
      doc["seed"] = seed;
      if (heights) doc["heights"] = heights_to_json(mm);
      write_text(out, doc.dump() + "\n");
    } else if (*zp) {
      Order m = Order::parse(order_s);
      auto z = closed_form_Z(m);
      if (at.empty()) std::cout << z.str() << "\n";
      else std::cout << rational_str(z.evaluate(parse_point(at))) << "\n";
    } else if (*rend) {
      RenderOptions opt;
      opt.scale = scale;
      opt.show_graph = !no_graph;
      opt.show_matching = !no_matching;
      opt.show_kites = kites;
      opt.fill = fill == "none" ? FaceFill::None : fill == "height" ? FaceFill::Height : FaceFill::Orientation;
      std::string svg, label;
      if (rorder->count()) {
        Diamond d = build_diamond(Order::parse(order_s));
        label = d.order.str();
        svg = render_svg(d, nullptr, opt);
      } else {
        Matching mm = matching_from_json(json::parse(read_input(input)));
        if (!mm.is_perfect()) throw DomainError("input matching is not perfect");
        label = mm.diamond().order.str();
        svg = render_svg(mm.diamond(), &mm, opt);
      }
      write_text(out.empty() ? "dp3_" + label + ".svg" : out, svg);
    } else if (*ver) {
      auto res = run_verify(Order::parse(max_order_s));
      json report = json::array();
      bool ok = true;
      for (auto& r : res) {
        ok = ok && r.pass;
        json j{{"check", r.name}, {"order", r.order}, {"pass", r.pass}};
        if (!r.pass) j["detail"] = r.detail;
        report.push_back(j);
      }
      std::cout << json{{"pass", ok}, {"checks", report}}.dump(1) << "\n";
      return ok ? 0 : 1;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << json{{"invariant_failure", e.what()}}.dump() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
