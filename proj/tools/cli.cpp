#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lgdual/json_io.hpp"

namespace lgdual::cli {

namespace {

using io::Json;

struct Result {
  Json value;
  int code = kOk;
  std::string diagnostic;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON text, or "@path" to read it from a file.
Json document(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return io::parse_document(read_file(arg.substr(1)));
  return io::parse_document(arg);
}

// Either --in PATH or the inline option; exactly one must be given.
Json main_document(const std::string& in_path, const std::string& inline_arg, const char* name) {
  if (!in_path.empty() && !inline_arg.empty())
    throw InputError(std::string("give either --in or --") + name + ", not both");
  if (!in_path.empty()) return io::parse_document(read_file(in_path));
  if (!inline_arg.empty()) return document(inline_arg);
  throw InputError(std::string("missing input: use --in PATH or --") + name);
}

// "[...]" is read as JSON; anything else as a comma-separated list.
std::vector<std::string> list_arg(const std::string& arg) {
  std::vector<std::string> out;
  if (!arg.empty() && (arg.front() == '[' || arg.front() == '@')) {
    Json j = document(arg);
    if (!j.is_array()) throw InputError("expected a JSON array, got " + j.dump());
    for (const auto& e : j) {
      if (e.is_string()) {
        out.push_back(e.get<std::string>());
      } else if (e.is_number_integer()) {
        out.push_back(e.dump());
      } else {
        throw InputError("list entries must be strings or integers, got " + e.dump());
      }
    }
    return out;
  }
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Rat> rat_list(const std::string& arg) {
  std::vector<Rat> out;
  for (const auto& s : list_arg(arg)) out.push_back(Rat::parse(s));
  return out;
}

std::vector<IntPwl> pwl_list(const std::string& arg) {
  std::vector<IntPwl> out;
  if (arg.empty()) return out;
  Json j = document(arg);
  if (!j.is_array()) throw InputError("expected a JSON array of pwl functions");
  for (const auto& f : j) out.push_back(io::parse_pwl(f));
  return out;
}

LeftoverPolicy policy_arg(const std::string& s) {
  if (s == "u") return LeftoverPolicy::kNonzeroToU;
  if (s == "v") return LeftoverPolicy::kNonzeroToV;
  throw InputError("policy must be \"u\" or \"v\", got \"" + s + "\"");
}

PwlOp op_arg(const std::string& s) {
  if (s == "+" || s == "add") return PwlOp::kAdd;
  if (s == "-" || s == "sub") return PwlOp::kSub;
  if (s == "∨" || s == "join" || s == "max") return PwlOp::kJoin;
  if (s == "∧" || s == "meet" || s == "min") return PwlOp::kMeet;
  throw InputError("unknown pwl operation \"" + s + "\"");
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool flat_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return is_scalar(e); });
}

std::string flat_text(const Json& j) {
  if (j.empty()) return "(none)";
  std::string s;
  for (const auto& e : j) s += (s.empty() ? "" : ", ") + scalar_text(e);
  return s;
}

void render_text(const Json& j, std::ostream& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (is_scalar(j)) {
    out << pad << scalar_text(j) << "\n";
  } else if (flat_array(j)) {
    out << pad << flat_text(j) << "\n";
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad << "[" << i << "]\n";
      render_text(j[i], out, indent + 1);
    }
  } else {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        out << pad << key << ": " << scalar_text(value) << "\n";
      } else if (flat_array(value)) {
        out << pad << key << ": " << flat_text(value) << "\n";
      } else {
        out << pad << key << ":\n";
        render_text(value, out, indent + 1);
      }
    }
  }
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "text") {
    render_text(j, out, 0);
  } else {
    out << j.dump() << "\n";
  }
}

struct Args {
  std::string format = "json";
  std::string in;
  std::string region, intervals, contains;
  std::string space, left, right, amap, a, b, policy = "u";
  std::string draft, lambdas, alpha, beta, x, y;
  std::size_t dense = 0;
  std::string group, term, values, target, eps, point;
  std::string f, g, op, fs, points;
};

class Dispatcher {
 public:
  explicit Dispatcher(CLI::App& app) : app_(app) {
    app_.fallthrough();
    app_.require_subcommand(1);
    app_.add_option("--format", a_.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    build_adc();
    build_aspace();
    build_draft();
    build_lgroup();
    build_pwl();
  }

  const std::function<Result()>& action() const { return action_; }
  const std::string& format() const { return a_.format; }

 private:
  CLI::App* leaf(CLI::App& parent, const std::string& name, const std::string& help,
                 std::function<Result()> fn) {
    CLI::App* sub = parent.add_subcommand(name, help);
    sub->callback([this, fn = std::move(fn)] { action_ = fn; });
    return sub;
  }

  static Result value(Json j) { return Result{std::move(j), kOk, {}}; }

  FinASpace space_opt() const { return io::parse_space(main_document(a_.in, a_.space, "space")); }
  FnGroup group_opt() const { return io::parse_group(main_document(a_.in, a_.group, "group")); }
  Draft draft_opt() const { return io::parse_draft(main_document(a_.in, a_.draft, "draft")); }

  void add_in(CLI::App* sub) { sub->add_option("--in", a_.in, "Input document path (- for stdin)"); }

  void build_adc() {
    CLI::App* adc_cmd = leaf(app_, "adc", "Admissible denominators of a rational region", [this] {
      if (a_.region.empty() == a_.intervals.empty())
        throw InputError("give exactly one of --region or --intervals");
      AdcSet s;
      if (!a_.region.empty()) {
        s = adc(io::parse_region(document(a_.region)));
      } else {
        Json fam = document(a_.intervals);
        if (!fam.is_array()) throw InputError("--intervals takes [[\"lo\",\"hi\"], ...]");
        std::vector<RatInterval> family;
        for (const auto& iv : fam) {
          if (!iv.is_array() || iv.size() != 2) throw InputError("an interval is [\"lo\", \"hi\"]");
          Rat lo = io::parse_rat(iv[0]);
          Rat hi = io::parse_rat(iv[1]);
          if (hi < lo) throw InputError("interval [" + lo.str() + ", " + hi.str() + "] is empty");
          family.push_back({lo, hi});
        }
        s = adc_intersect_intervals(family);
      }
      if (!a_.contains.empty()) return value(adc_contains(s, DivNat::parse(a_.contains)));
      return value(io::to_json(s));
    });
    adc_cmd->add_option("--region", a_.region, "Region JSON or @file");
    adc_cmd->add_option("--intervals", a_.intervals, "Lower-directed interval family JSON or @file");
    adc_cmd->add_option("--contains", a_.contains, "Membership query");

    CLI::App* ac_cmd = leaf(app_, "ac", "Points of a space admissible for a region", [this] {
      FinASpace x = space_opt();
      PointSet s = ac(x, io::parse_region(document(a_.region)));
      return value(io::subset_to_json(x, s));
    });
    add_in(ac_cmd);
    ac_cmd->add_option("--space", a_.space, "Space JSON or @file");
    ac_cmd->add_option("--region", a_.region, "Region JSON or @file")->required();
  }

  void build_aspace() {
    CLI::App* group = app_.add_subcommand("aspace", "Finite a-spaces");
    group->require_subcommand(1);

    CLI::App* check = leaf(*group, "check", "Check the denominator-decreasing law of a map", [this] {
      return value(check_amap(io::parse_amap(main_document(a_.in, a_.amap, "map"))));
    });
    add_in(check);
    check->add_option("--map", a_.amap, "Map JSON or @file");

    CLI::App* prod = leaf(*group, "product", "Product space with the lcm denominator", [this] {
      return value(io::to_json(product(io::parse_space(document(a_.left)),
                                        io::parse_space(document(a_.right)))));
    });
    prod->add_option("--left", a_.left, "First factor")->required();
    prod->add_option("--right", a_.right, "Second factor")->required();

    CLI::App* sep = leaf(*group, "separate", "Separate two disjoint subsets", [this] {
      FinASpace x = space_opt();
      PointSet a = x.subset(list_arg(a_.a));
      PointSet b = x.subset(list_arg(a_.b));
      Separation s = separate(x, a, b, policy_arg(a_.policy));
      Json out{{"U", io::subset_to_json(x, s.u)},
               {"V", io::subset_to_json(x, s.v)},
               {"outside", io::subset_to_json(x, (s.u | s.v).complement())}};
      return value(out);
    });
    add_in(sep);
    sep->add_option("--space", a_.space, "Space JSON or @file");
    sep->add_option("--a", a_.a, "Labels of A")->required();
    sep->add_option("--b", a_.b, "Labels of B")->required();
    sep->add_option("--policy", a_.policy, "Leftover points with zeta != 0 join U (u) or V (v)");

    CLI::App* anormal = leaf(*group, "anormal", "Witnesses for the a-normality axioms", [this] {
      FinASpace x = space_opt();
      return value(io::to_json(verify_anormal(x), x));
    });
    add_in(anormal);
    anormal->add_option("--space", a_.space, "Space JSON or @file");
  }

  void build_draft() {
    CLI::App* group = app_.add_subcommand("draft", "Drafts, realisation and Urysohn maps");
    group->require_subcommand(1);

    CLI::App* validate = leaf(*group, "validate", "Check axioms D1-D4", [this] {
      Draft d = draft_opt();
      DraftDiagnostic diag = validate_draft(d);
      Result r = value(io::to_json(diag, d.space));
      if (diag.status == DraftCheck::kStructure) {
        r.code = kMalformed;
        r.diagnostic = diag.message;
      } else if (!diag.ok()) {
        r.code = kPrecondition;
        r.diagnostic = diag.message;
      }
      return r;
    });
    add_in(validate);
    validate->add_option("--draft", a_.draft, "Draft JSON or @file");

    CLI::App* refine = leaf(*group, "refine", "Refine at new levels", [this] {
      Draft d = draft_opt();
      std::vector<Rat> lambdas = rat_list(a_.lambdas);
      if (a_.dense > 0) {
        auto extra = stern_brocot_sequence(d.alpha, d.beta, a_.dense);
        lambdas.insert(lambdas.end(), extra.begin(), extra.end());
      }
      return value(io::to_json(refine_sequence(d, lambdas, policy_arg(a_.policy))));
    });
    add_in(refine);
    refine->add_option("--draft", a_.draft, "Draft JSON or @file");
    refine->add_option("--lambda", a_.lambdas, "New levels, comma-separated or a JSON array");
    refine->add_option("--dense", a_.dense, "Also refine at the first N Stern-Brocot rationals");
    refine->add_option("--policy", a_.policy, "Leftover points with zeta != 0 join U (u) or V (v)");

    CLI::App* realize_cmd = leaf(*group, "realize", "Denominator-decreasing realisation", [this] {
      return value(io::to_json(realize(draft_opt())));
    });
    add_in(realize_cmd);
    realize_cmd->add_option("--draft", a_.draft, "Draft JSON or @file");

    CLI::App* ury = leaf(*group, "urysohn", "a-map onto {alpha} on A and {beta} on B", [this] {
      FinASpace x = space_opt();
      return value(io::to_json(urysohn(x, x.subset(list_arg(a_.a)), x.subset(list_arg(a_.b)),
                                       Rat::parse(a_.alpha), Rat::parse(a_.beta))));
    });
    add_in(ury);
    ury->add_option("--space", a_.space, "Space JSON or @file");
    ury->add_option("--a", a_.a, "Labels of A")->required();
    ury->add_option("--b", a_.b, "Labels of B")->required();
    ury->add_option("--alpha", a_.alpha, "Value on A")->required();
    ury->add_option("--beta", a_.beta, "Value on B")->required();

    CLI::App* sepmap = leaf(*group, "separating", "a-map with f(x)=0, f(y)=1", [this] {
      FinASpace x = space_opt();
      return value(io::to_json(separating_map(x, x.index_of(a_.x), x.index_of(a_.y))));
    });
    add_in(sepmap);
    sepmap->add_option("--space", a_.space, "Space JSON or @file");
    sepmap->add_option("--x", a_.x, "Point sent to 0")->required();
    sepmap->add_option("--y", a_.y, "Point sent to 1")->required();

    CLI::App* witness = leaf(*group, "witness", "a-map with den f(x) = zeta(x)", [this] {
      FinASpace x = space_opt();
      return value(io::to_json(denominator_witness(x, x.index_of(a_.x))));
    });
    add_in(witness);
    witness->add_option("--space", a_.space, "Space JSON or @file");
    witness->add_option("--x", a_.x, "Point")->required();

    CLI::App* embed_cmd = leaf(*group, "embed", "Injective, denominator-exact family into [0,1]", [this] {
      Json out = Json::array();
      for (const auto& f : embed(space_opt())) out.push_back(io::to_json(f));
      return value(out);
    });
    add_in(embed_cmd);
    embed_cmd->add_option("--space", a_.space, "Space JSON or @file");
  }

  void build_lgroup() {
    CLI::App* group = app_.add_subcommand("lgroup", "Function l-groups on finite a-spaces");
    group->require_subcommand(1);

    CLI::App* norm = leaf(*group, "norm", "Sup norm of a value map or of a term", [this] {
      if (!a_.values.empty()) {
        Json v = document(a_.values);
        if (!v.is_object()) throw InputError("--values maps labels to rationals");
        FnValues vals;
        for (const auto& [label, r] : v.items()) vals.push_back(io::parse_rat(r));
        return value(io::to_json(seminorm(vals)));
      }
      FnGroup g = group_opt();
      return value(io::to_json(seminorm(eval_term(g, io::parse_term(document(a_.term))))));
    });
    add_in(norm);
    norm->add_option("--values", a_.values, "Value map JSON or @file");
    norm->add_option("--group", a_.group, "Group JSON or @file (with --term)");
    norm->add_option("--term", a_.term, "Term JSON or @file");

    CLI::App* eval = leaf(*group, "eval", "Evaluate a term pointwise", [this] {
      FnGroup g = group_opt();
      return value(io::values_to_json(g.space, eval_term(g, io::parse_term(document(a_.term)))));
    });
    add_in(eval);
    eval->add_option("--group", a_.group, "Group JSON or @file");
    eval->add_option("--term", a_.term, "Term JSON or @file")->required();

    CLI::App* vg = leaf(*group, "valuegroup", "Spectral denominator at a point", [this] {
      FnGroup g = group_opt();
      return value(io::to_json(value_group(g, g.space.index_of(a_.point))));
    });
    add_in(vg);
    vg->add_option("--group", a_.group, "Group JSON or @file");
    vg->add_option("--point", a_.point, "Point label")->required();

    CLI::App* max = leaf(*group, "max", "Max spectrum of a separating group", [this] {
      return value(io::to_json(max_of_group(group_opt())));
    });
    add_in(max);
    max->add_option("--group", a_.group, "Group JSON or @file");

    CLI::App* sw = leaf(*group, "sw-check", "Stone-Weierstrass density conditions", [this] {
      FnGroup g = group_opt();
      return value(io::to_json(sw_conditions(g), g.space));
    });
    add_in(sw);
    sw->add_option("--group", a_.group, "Group JSON or @file");

    CLI::App* approx = leaf(*group, "approx", "Term within eps of a target", [this] {
      FnGroup g = group_opt();
      FnValues target = io::parse_values(document(a_.target), g.space);
      Approximation r = sw_approximate(g, target, Rat::parse(a_.eps));
      return value(Json{{"term", render(r.term)},
                        {"tree", io::to_json(r.term)},
                        {"error", io::to_json(r.error)},
                        {"method", r.affine ? "affine" : "lattice"}});
    });
    add_in(approx);
    approx->add_option("--group", a_.group, "Group JSON or @file");
    approx->add_option("--target", a_.target, "Target value map JSON or @file")->required();
    approx->add_option("--eps", a_.eps, "Tolerance")->required();

    CLI::App* eta = leaf(*group, "eta", "Check the unit X -> Max C(X)", [this] {
      return value(io::to_json(eta_check(space_opt())));
    });
    add_in(eta);
    eta->add_option("--space", a_.space, "Space JSON or @file");

    CLI::App* complete = leaf(*group, "complete", "Does the group exhaust C(X)?", [this] {
      FnGroup g = group_opt();
      return value(io::to_json(completeness_check(g), g.space));
    });
    add_in(complete);
    complete->add_option("--group", a_.group, "Group JSON or @file");
  }

  void build_pwl() {
    CLI::App* group = app_.add_subcommand("pwl", "Integer piecewise-linear functions on [0,1]");
    group->require_subcommand(1);

    auto f_opt = [this](CLI::App* sub) {
      sub->add_option("--f", a_.f, "Function JSON or @file")->required();
    };

    CLI::App* ev = leaf(*group, "eval", "Evaluate at a rational", [this] {
      return value(io::to_json(pwl_eval(io::parse_pwl(document(a_.f)), Rat::parse(a_.x))));
    });
    f_opt(ev);
    ev->add_option("--x", a_.x, "Point in [0,1]")->required();

    CLI::App* comb = leaf(*group, "combine", "f + g, f - g, f ∨ g or f ∧ g", [this] {
      return value(io::to_json(pwl_combine(io::parse_pwl(document(a_.f)),
                                           io::parse_pwl(document(a_.g)), op_arg(a_.op))));
    });
    f_opt(comb);
    comb->add_option("--g", a_.g, "Function JSON or @file")->required();
    comb->add_option("--op", a_.op, "One of + - join meet (or ∨ ∧)")->required();

    CLI::App* norm = leaf(*group, "norm", "Sup norm on [0,1]", [this] {
      return value(io::to_json(pwl_norm(io::parse_pwl(document(a_.f)))));
    });
    f_opt(norm);

    CLI::App* vg = leaf(*group, "valuegroup", "d with value group (1/d)Z at x", [this] {
      Rat x = Rat::parse(a_.x);
      std::vector<IntPwl> fs = pwl_list(a_.fs);
      Json out{{"d", io::to_json(pwl_value_group(fs, x))}};
      if (fs.empty()) {
        AffinePiece w = unit_fraction_witness(x);
        out["witness"] = Json{{"z1", io::to_json(w.z1)}, {"z2", io::to_json(w.z2)}};
      }
      return value(out);
    });
    vg->add_option("--fs", a_.fs, "JSON array of functions; omitted means all of the group");
    vg->add_option("--x", a_.x, "Point in [0,1]")->required();

    CLI::App* amap = leaf(*group, "amap", "Denominator law at sample points", [this] {
      return value(pwl_is_amap(io::parse_pwl(document(a_.f)), rat_list(a_.points)));
    });
    f_opt(amap);
    amap->add_option("--samples", a_.points, "Sample points")->required();

    CLI::App* sample = leaf(*group, "sample", "Restrict functions to finitely many points", [this] {
      return value(io::to_json(pwl_sample(pwl_list(a_.fs), rat_list(a_.points))));
    });
    sample->add_option("--fs", a_.fs, "JSON array of functions");
    sample->add_option("--points", a_.points, "Distinct points in [0,1]")->required();
  }

  CLI::App& app_;
  Args a_;
  std::function<Result()> action_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact computations for a-spaces, drafts and function l-groups", "lgdual");
  Dispatcher dispatch(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }

  try {
    Result r = dispatch.action()();
    emit(r.value, dispatch.format(), out);
    if (!r.diagnostic.empty()) err << r.diagnostic << "\n";
    return r.code;
  } catch (const PreconditionError& e) {
    err << "precondition violated [" << e.condition() << "]: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InputError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const nlohmann::json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace lgdual::cli
