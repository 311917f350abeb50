#include "metaq/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "metaq/oracle.hpp"
#include "metaq/wedderburn.hpp"

namespace metaq {

namespace {

using nlohmann::json;

std::string field_name(const Integer& conductor) {
    if (conductor <= 2) return "Q";
    return "Q(z" + conductor.get_str() + ")";
}

std::string component_to_text(const WedderburnComponent& c) {
    std::string body = field_name(c.conductor);
    if (c.matrix_size > 1) body = "M" + c.matrix_size.get_str() + "(" + body + ")";
    return c.multiplicity.get_str() + " " + body;
}

}  // namespace

std::string decomposition_to_text(const Decomposition& d) {
    std::string out;
    for (const auto& c : d.components) {
        if (!out.empty()) out += " + ";
        out += component_to_text(c);
    }
    return out;
}

namespace cli {

namespace {

struct Options {
    MetacyclicParams params;
    std::string format = "text";
    bool json() const { return format == "json"; }
};

json params_to_json(const MetacyclicParams& p) {
    return json{{"p", p.p}, {"n", p.n}, {"m", p.m}, {"r", p.r}, {"s", p.s}};
}

json document(const MetacyclicParams& params, const std::string& payload_kind, json payload) {
    return json{{"schema_version", "1"},
                {"params", params_to_json(params)},
                {"payload", json{{payload_kind, std::move(payload)}}}};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

std::string element_to_text(const GroupElement& x) {
    if (x.i == 0 && x.j == 0) return "1";
    std::string out;
    if (x.i != 0) {
        out += "a";
        if (x.i != 1) out += "^" + x.i.get_str();
    }
    if (x.j != 0) {
        if (!out.empty()) out += " ";
        out += "b";
        if (x.j != 1) out += "^" + x.j.get_str();
    }
    return out;
}

json decomposition_to_json(const Decomposition& d) {
    json components = json::array();
    for (const auto& c : d.components)
        components.push_back(json{{"multiplicity", c.multiplicity.get_str()},
                                  {"matrix_size", c.matrix_size.get_str()},
                                  {"conductor", c.conductor.get_str()}});
    return json{{"components", std::move(components)},
                {"dimension", d.dimension().get_str()},
                {"text", decomposition_to_text(d)}};
}

json matrix_to_json(const Matrix<Rational>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

MetacyclicParams parse_tuple(const std::string& text) {
    MetacyclicParams p;
    unsigned long vals[5];
    std::size_t pos = 0;
    for (int k = 0; k < 5; ++k) {
        const std::size_t comma = text.find(',', pos);
        const std::string piece =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        if (piece.empty() || (comma == std::string::npos && k != 4))
            throw CLI::ValidationError("tuple", "expected p,n,m,r,s");
        vals[k] = std::stoul(piece);
        pos = comma + 1;
    }
    p.p = vals[0];
    p.n = vals[1];
    p.m = vals[2];
    p.r = vals[3];
    p.s = vals[4];
    return p;
}

// ---- subcommand handlers ----

int cmd_validate(const Options& opt, std::ostream& out) {
    std::string error_kind, detail;
    try {
        const auto g = ValidatedPresentation::validate(opt.params);
        if (opt.json()) {
            emit(out, document(opt.params, "validation",
                               json{{"valid", true},
                                    {"kind", g.is_split() ? "split" : "non-split"},
                                    {"order", g.group_order().get_str()}}));
        } else {
            out << "valid: " << (g.is_split() ? "split" : "non-split") << " "
                << opt.params.to_string() << ", |G| = " << g.group_order().get_str() << "\n";
        }
        return 0;
    } catch (const NotPrimeError& e) {
        error_kind = "NotPrime";
        detail = e.what();
    } catch (const NotReducedError& e) {
        error_kind = "NotReduced";
        detail = e.condition();
    } catch (const Exceptional2GroupError& e) {
        error_kind = "Exceptional2Group";
        detail = e.what();
    }
    if (opt.json()) {
        emit(out, document(opt.params, "validation",
                           json{{"valid", false}, {"error", error_kind}, {"detail", detail}}));
    } else {
        out << "invalid: " << error_kind << " (" << detail << ")\n";
    }
    return 1;
}

int cmd_order(const Options& opt, std::ostream& out) {
    const auto g = ValidatedPresentation::validate(opt.params);
    if (opt.json())
        emit(out, document(opt.params, "order", json{{"order", g.group_order().get_str()}}));
    else
        out << g.group_order().get_str() << "\n";
    return 0;
}

int cmd_orbits(const Options& opt, std::ostream& out) {
    const auto g = ValidatedPresentation::validate(opt.params);
    const OrbitCensus census = orbit_census(g);
    if (opt.json()) {
        json sizes = json::array();
        for (const auto& [t, count] : census.per_size)
            sizes.push_back(json{{"t", t},
                                 {"size", prime_power(opt.params.p, t).get_str()},
                                 {"count", count.get_str()}});
        emit(out, document(opt.params, "census",
                           json{{"fixed_points", census.fixed_points.get_str()},
                                {"per_size", std::move(sizes)}}));
    } else {
        out << "orbits of size 1: " << census.fixed_points.get_str() << "\n";
        for (const auto& [t, count] : census.per_size)
            out << "orbits of size " << prime_power(opt.params.p, t).get_str() << ": "
                << count.get_str() << "\n";
    }
    return 0;
}

constexpr std::size_t kListCap = 1024;

int cmd_irreps(const Options& opt, std::ostream& out) {
    const auto g = ValidatedPresentation::validate(opt.params);
    const auto counts = irrep_counts_by_degree(g);
    const Integer total = irrep_count(g);
    json listed = json::array();
    std::vector<IrrepDescriptor> descriptors;
    if (total <= kListCap) descriptors = enumerate_irreps(g);
    if (opt.json()) {
        json by_degree = json::array();
        for (const auto& [t, count] : counts)
            by_degree.push_back(json{{"degree_exponent", t},
                                     {"degree", prime_power(opt.params.p, t).get_str()},
                                     {"count", count.get_str()}});
        for (const auto& d : descriptors) listed.push_back(descriptor_to_string(d));
        json payload{{"by_degree", std::move(by_degree)}, {"total", total.get_str()}};
        if (!descriptors.empty()) payload["descriptors"] = std::move(listed);
        emit(out, document(opt.params, "counts", std::move(payload)));
    } else {
        for (const auto& [t, count] : counts)
            out << "degree " << prime_power(opt.params.p, t).get_str() << ": " << count.get_str()
                << "\n";
        out << "total: " << total.get_str() << "\n";
        for (const auto& d : descriptors) out << descriptor_to_string(d) << "\n";
    }
    return 0;
}

int cmd_chartable(const Options& opt, std::ostream& out, std::size_t bound) {
    const auto g = ValidatedPresentation::validate(opt.params);
    const EnumeratedGroup en = enumerate(g, bound);
    const auto irreps = enumerate_irreps(g);
    std::vector<GroupElement> reps;
    for (const auto& cls : en.conjugacy_classes) reps.push_back(en.elements[cls.front()]);

    if (opt.json()) {
        json classes = json::array();
        for (std::size_t c = 0; c < reps.size(); ++c)
            classes.push_back(json{{"representative", element_to_text(reps[c])},
                                   {"size", en.conjugacy_classes[c].size()}});
        json characters = json::array();
        for (const auto& d : irreps) {
            json values = json::array();
            for (const auto& rep : reps) values.push_back(character_value(g, d, rep).to_string());
            characters.push_back(
                json{{"descriptor", descriptor_to_string(d)}, {"values", std::move(values)}});
        }
        emit(out, document(opt.params, "chartable",
                           json{{"classes", std::move(classes)},
                                {"characters", std::move(characters)}}));
    } else {
        out << "classes:";
        for (const auto& rep : reps) out << " [" << element_to_text(rep) << "]";
        out << "\n";
        for (const auto& d : irreps) {
            out << descriptor_to_string(d) << ":";
            for (const auto& rep : reps) out << " " << character_value(g, d, rep).to_string();
            out << "\n";
        }
    }
    return 0;
}

int cmd_galois_classes(const Options& opt, std::ostream& out) {
    const auto g = ValidatedPresentation::validate(opt.params);
    const auto classes = galois_classes(g);
    if (opt.json()) {
        json arr = json::array();
        for (std::size_t id = 0; id < classes.size(); ++id) {
            const auto& cls = classes[id];
            json entry{{"id", id},
                       {"degree", cls.degree.get_str()},
                       {"conductor", cls.conductor.get_str()},
                       {"size", cls.members.size()},
                       {"rational_degree", cls.rational_degree.get_str()},
                       {"representative", descriptor_to_string(cls.representative())}};
            if (cls.members.size() <= 64) {
                json members = json::array();
                for (const auto& mem : cls.members) members.push_back(descriptor_to_string(mem));
                entry["members"] = std::move(members);
            }
            arr.push_back(std::move(entry));
        }
        emit(out, document(opt.params, "galois_classes", json{{"classes", std::move(arr)}}));
    } else {
        for (std::size_t id = 0; id < classes.size(); ++id) {
            const auto& cls = classes[id];
            out << "class " << id << ": degree " << cls.degree.get_str() << ", conductor "
                << cls.conductor.get_str() << ", size " << cls.members.size() << ", rep "
                << descriptor_to_string(cls.representative()) << "\n";
        }
    }
    return 0;
}

int cmd_rational_count(const Options& opt, std::ostream& out) {
    const auto g = ValidatedPresentation::validate(opt.params);
    const auto counts = rational_irrep_counts(g);
    Integer total(0);
    for (const auto& [deg, count] : counts) total += count;
    if (opt.json()) {
        json arr = json::array();
        for (const auto& [deg, count] : counts)
            arr.push_back(json{{"degree", deg.get_str()}, {"count", count.get_str()}});
        emit(out, document(opt.params, "counts",
                           json{{"by_degree", std::move(arr)},
                                {"total_nontrivial", total.get_str()}}));
    } else {
        for (const auto& [deg, count] : counts)
            out << "degree " << deg.get_str() << ": " << count.get_str() << "\n";
        out << "total non-trivial: " << total.get_str() << "\n";
    }
    return 0;
}

int cmd_wedderburn(const Options& opt, std::ostream& out) {
    const auto g = ValidatedPresentation::validate(opt.params);
    const Decomposition d = decompose(g);
    if (opt.json())
        emit(out, document(opt.params, "decomposition", decomposition_to_json(d)));
    else
        out << decomposition_to_text(d) << "\n";
    return 0;
}

int cmd_rational_rep(const Options& opt, std::ostream& out, unsigned long class_id) {
    const auto g = ValidatedPresentation::validate(opt.params);
    const auto classes = galois_classes(g);
    if (class_id >= classes.size())
        throw TooLargeError("rational-rep: class id " + std::to_string(class_id) +
                            " out of range (have " + std::to_string(classes.size()) + ")");
    const auto& cls = classes[class_id];
    const RationalMatrixRep rep = rational_rep_for(g, cls);
    if (opt.json()) {
        emit(out, document(opt.params, "representation",
                           json{{"class_id", class_id},
                                {"degree", rep.degree.get_str()},
                                {"conductor", cls.conductor.get_str()},
                                {"mat_a", matrix_to_json(rep.mat_a)},
                                {"mat_b", matrix_to_json(rep.mat_b)}}));
    } else {
        out << "class " << class_id << ": rational degree " << rep.degree.get_str()
            << ", conductor " << cls.conductor.get_str() << "\n";
        for (const auto* mat : {&rep.mat_a, &rep.mat_b}) {
            out << (mat == &rep.mat_a ? "mat_a:" : "mat_b:") << "\n";
            for (std::size_t i = 0; i < mat->rows(); ++i) {
                for (std::size_t j = 0; j < mat->cols(); ++j)
                    out << (j ? " " : "") << (*mat)(i, j).get_str();
                out << "\n";
            }
        }
    }
    return 0;
}

int cmd_verify(const Options& opt, std::ostream& out, std::size_t bound) {
    const auto g = ValidatedPresentation::validate(opt.params);
    struct Check {
        std::string name;
        bool pass;
        std::string details;
    };
    std::vector<Check> checks;
    auto add = [&](std::string name, bool pass, std::string details = "") {
        checks.push_back({std::move(name), pass, std::move(details)});
    };

    add("class count identity", class_count_identity(g, bound));
    add("degree squares sum to |G|", degree_square_identity(g, bound));
    {
        const OrbitCensus closed = orbit_census(g);
        const OrbitCensus brute = orbit_census_by_enumeration(g, bound);
        add("orbit census matches enumeration",
            closed.fixed_points == brute.fixed_points && closed.per_size == brute.per_size);
    }
    {
        const auto closed = rational_irrep_counts(g);
        const auto derived = rational_counts_from_classes(g);
        add("rational counts match Galois classes", closed == derived);
    }
    {
        const CrossCheckReport report = cross_check(g);
        add("decomposition formula matches classes", report.equal, report.details);
        add("dimension identity", dimension_check(report.formula));
        Integer count(0);
        for (const auto& [deg, c] : rational_irrep_counts(g)) count += c;
        add("component count = 1 + rational count",
            Integer(galois_classes(g).size()) == count + 1);
    }
    {
        const bool columns = g.group_order() <= (1 << 9);
        const OrthogonalityReport report = orthogonality_report(g, bound, columns);
        add(columns ? "orthogonality (rows and columns)" : "orthogonality (rows)", report.ok,
            report.failure);
    }

    bool all = true;
    for (const auto& c : checks) all = all && c.pass;
    if (opt.json()) {
        json arr = json::array();
        for (const auto& c : checks) {
            json entry{{"name", c.name}, {"pass", c.pass}};
            if (!c.details.empty()) entry["details"] = c.details;
            arr.push_back(std::move(entry));
        }
        emit(out, document(opt.params, "verification",
                           json{{"checks", std::move(arr)}, {"all_pass", all}}));
    } else {
        for (const auto& c : checks)
            out << (c.pass ? "ok   " : "FAIL ") << c.name
                << (c.details.empty() ? "" : " (" + c.details + ")") << "\n";
        out << (all ? "all checks passed" : "verification FAILED") << "\n";
    }
    return all ? 0 : 2;
}

int cmd_sweep(const Options& opt, std::ostream& out, const Integer& max_order) {
    const std::vector<MetacyclicParams> tuples = enumerate_valid_tuples({2, 3, 5}, max_order);
    bool all_ok = true;
    std::map<std::string, MetacyclicParams> seen;
    bool all_distinct = true;
    json arr = json::array();
    for (const auto& params : tuples) {
        const auto g = ValidatedPresentation::validate(params);
        const CrossCheckReport report = cross_check(g);
        const bool dim_ok = dimension_check(report.formula);
        const std::string text = decomposition_to_text(report.formula);
        const bool ok = report.equal && dim_ok;
        all_ok = all_ok && ok;
        auto [it, inserted] = seen.emplace(text, params);
        if (!inserted) all_distinct = false;
        if (opt.json()) {
            arr.push_back(json{{"params", params_to_json(params)},
                               {"decomposition", text},
                               {"cross_check", report.equal},
                               {"dimension_ok", dim_ok}});
        } else {
            out << (ok ? "ok   " : "FAIL ") << params.to_string() << "  " << text << "\n";
        }
    }
    if (opt.json()) {
        json payload{{"tuples", std::move(arr)},
                     {"count", tuples.size()},
                     {"max_order", max_order.get_str()},
                     {"all_ok", all_ok},
                     {"all_distinct", all_distinct}};
        emit(out, json{{"schema_version", "1"}, {"payload", json{{"sweep", std::move(payload)}}}});
    } else {
        out << "swept " << tuples.size() << " tuples: " << (all_ok ? "all consistent" : "FAILURES")
            << ", decompositions " << (all_distinct ? "pairwise distinct" : "NOT distinct") << "\n";
    }
    return (all_ok && all_distinct) ? 0 : 2;
}

int cmd_compare(const Options& opt, std::ostream& out, const MetacyclicParams& left,
                const MetacyclicParams& right) {
    const auto g1 = ValidatedPresentation::validate(left);
    const auto g2 = ValidatedPresentation::validate(right);
    const CompareResult result = compare(g1, g2);
    const std::string text = result == CompareResult::Equal ? "Equal" : "Distinct";
    if (opt.json()) {
        emit(out, json{{"schema_version", "1"},
                       {"params", params_to_json(left)},
                       {"other_params", params_to_json(right)},
                       {"payload", json{{"compare", json{{"result", text}}}}}});
    } else {
        out << text << "\n";
    }
    return 0;
}

void add_param_options(CLI::App* cmd, Options& opt, bool with_format = true) {
    cmd->add_option("-p,--prime", opt.params.p, "prime p")->required();
    cmd->add_option("-n", opt.params.n, "exponent n (order of a is p^n)")->required();
    cmd->add_option("-m", opt.params.m, "exponent m")->required();
    cmd->add_option("-r", opt.params.r, "exponent r (0 for split)");
    cmd->add_option("-s", opt.params.s, "exponent s (conjugation is a -> a^(1+p^(n-s)))");
    if (with_format)
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Wedderburn decompositions of rational group algebras of ordinary "
                 "metacyclic p-groups"};
    app.require_subcommand(1);

    Options opt;
    std::size_t bound = kDefaultEnumerationBound;
    unsigned long class_id = 0;
    std::string sweep_max_order = "6561";
    std::string compare_left, compare_right;
    std::string compare_format = "text";

    auto* validate = app.add_subcommand("validate", "check the reduced presentation conditions");
    add_param_options(validate, opt);
    auto* order = app.add_subcommand("order", "group order p^(n+m)");
    add_param_options(order, opt);
    auto* orbits = app.add_subcommand("orbits", "orbit census of the conjugation action");
    add_param_options(orbits, opt);
    auto* irreps = app.add_subcommand("irreps", "complex irreducible census and descriptors");
    add_param_options(irreps, opt);
    auto* chartable = app.add_subcommand("chartable", "character table over conjugacy classes");
    add_param_options(chartable, opt);
    chartable->add_option("--bound", bound, "enumeration bound");
    auto* gclasses = app.add_subcommand("galois-classes", "Galois conjugacy classes");
    add_param_options(gclasses, opt);
    auto* rcount = app.add_subcommand("rational-count", "rational irreducible counts by degree");
    add_param_options(rcount, opt);
    auto* wedder = app.add_subcommand("wedderburn", "Wedderburn decomposition of QG");
    add_param_options(wedder, opt);
    auto* rrep = app.add_subcommand("rational-rep", "rational matrix representation of a class");
    add_param_options(rrep, opt);
    rrep->add_option("--class", class_id, "Galois class id (see galois-classes)")->required();
    auto* verify = app.add_subcommand("verify", "run the brute-force verification battery");
    add_param_options(verify, opt);
    verify->add_option("--bound", bound, "enumeration bound (elements)");
    auto* sweep = app.add_subcommand("sweep", "verify all tuples with p in {2,3,5} up to an order");
    sweep->add_option("--max-order", sweep_max_order, "largest group order");
    sweep->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    auto* cmp = app.add_subcommand("compare", "compare two parameter tuples p,n,m,r,s");
    cmp->add_option("left", compare_left, "first tuple p,n,m,r,s")->required();
    cmp->add_option("right", compare_right, "second tuple p,n,m,r,s")->required();
    cmp->add_option("--format", compare_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<const char*> argv;
        argv.push_back("metaq");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 64;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt, out);
        if (order->parsed()) return cmd_order(opt, out);
        if (orbits->parsed()) return cmd_orbits(opt, out);
        if (irreps->parsed()) return cmd_irreps(opt, out);
        if (chartable->parsed()) return cmd_chartable(opt, out, bound);
        if (gclasses->parsed()) return cmd_galois_classes(opt, out);
        if (rcount->parsed()) return cmd_rational_count(opt, out);
        if (wedder->parsed()) return cmd_wedderburn(opt, out);
        if (rrep->parsed()) return cmd_rational_rep(opt, out, class_id);
        if (verify->parsed()) return cmd_verify(opt, out, bound);
        if (sweep->parsed()) return cmd_sweep(opt, out, Integer(sweep_max_order));
        if (cmp->parsed()) {
            opt.format = compare_format;
            return cmd_compare(opt, out, parse_tuple(compare_left), parse_tuple(compare_right));
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const TooLargeError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const MismatchError& e) {
        err << "mismatch: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 64;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace cli
}  // namespace metaq
