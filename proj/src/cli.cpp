#include "conedef/cli.hpp"

#include "conedef/errors.hpp"
#include "conedef/p1_cech.hpp"
#include "conedef/projective_cohomology.hpp"
#include "conedef/rnc_presentation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace conedef::cli {

namespace {

using Json = nlohmann::ordered_json;
using namespace conedef::cone;

int parse_int(const std::string& token, const std::string& context) {
    int v = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc() || ptr != last)
        throw UsageError("invalid integer '" + token + "' in '" + context + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

Json variety_json(const PolarizedVariety& v) {
    Json j;
    j["descriptor"] = descriptor(v);
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RationalNormalCurve>) {
                j["family"] = "rational_normal_curve";
                j["parameters"] = {{"d", x.d}};
            } else if constexpr (std::is_same_v<T, VeroneseProjectiveSpace>) {
                j["family"] = "veronese";
                j["parameters"] = {{"n", x.n}, {"d", x.d}};
            } else if constexpr (std::is_same_v<T, SegreProduct>) {
                j["family"] = "segre";
                j["parameters"] = {{"d", x.d}};
            } else if constexpr (std::is_same_v<T, ProductBundle>) {
                j["family"] = "product";
                j["parameters"] = {{"a", x.a}, {"b", x.b}};
            } else {
                j["family"] = "delpezzo";
                j["parameters"] = {{"r", x.r}};
            }
        },
        v);
    j["dimension"] = dimension(v);
    return j;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json step_json(const CertificateStep& s) {
    Json j;
    j["lemma"] = s.lemma;
    j["weight"] = optional_int(s.weight);
    j["k_exponent"] = optional_int(s.k_exponent);
    j["term"] = s.term;
    if (const auto* i = std::get_if<std::int64_t>(&s.value))
        j["value"] = *i;
    else if (const auto* str = std::get_if<std::string>(&s.value))
        j["value"] = *str;
    else
        j["value"] = nullptr;
    j["claimed"] = s.claimed;
    j["rule"] = s.rule;
    j["anchor"] = s.anchor;
    j["status"] = to_string(s.status);
    return j;
}

Json certificate_json(const Certificate& c) {
    const auto n = c.counts();
    Json j;
    j["claim"] = c.claim;
    j["verdict"] = to_string(c.verdict);
    j["counts"] = {{"verified", n.verified}, {"asserted", n.asserted}, {"contradicted", n.contradicted}};
    j["uncovered"] = c.uncovered;
    j["steps"] = Json::array();
    for (const auto& s : c.steps) j["steps"].push_back(step_json(s));
    return j;
}

Json envelope(const std::string& command, Json inputs, Json result) {
    Json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    return j;
}

bool trace_from_env() {
    const char* v = std::getenv("CONEDEF_TRACE");
    return v != nullptr && std::string(v) == "1";
}

Json window_json(int lo, int hi) { return {{"lo", lo}, {"hi", hi}}; }

struct T1Options {
    std::string descriptor;
    std::string weights = std::to_string(default_window_lo) + ".." + std::to_string(default_window_hi);
    int order = 1;
    std::string format = "json";
    bool trace = false;
};

void cmd_t1(const T1Options& o, std::ostream& out) {
    const auto v = parse_descriptor(o.descriptor);
    const auto [lo, hi] = parse_window(o.weights);
    const bool trace = o.trace || trace_from_env();
    const auto table = graded_table(v, lo, hi, o.order);
    const auto rule = weight_rule(v, o.order);

    if (o.format == "csv") {
        out << (trace ? "weight,dimension,rule,anchor\n" : "weight,dimension\n");
        for (const auto& [m, dim] : table.entries) {
            out << m << ',' << dim;
            if (trace) out << ",\"" << rule.rule << "\",\"" << rule.anchor << '"';
            out << '\n';
        }
        return;
    }

    Json entries = Json::object();
    std::vector<int> nonzero;
    for (const auto& [m, dim] : table.entries) {
        entries[std::to_string(m)] = dim;
        if (dim != 0) nonzero.push_back(m);
    }
    Json result;
    result["variety"] = variety_json(v);
    result["order"] = o.order;
    result["window"] = window_json(lo, hi);
    result["entries"] = entries;
    result["nonzero_weights"] = nonzero;
    if (o.order == 1)
        result["verdict_note"] = nonzero.empty() ? "rigid within window" : "not rigid: nonzero weights in window";

    Json inputs = {{"descriptor", o.descriptor}, {"weights", window_json(lo, hi)}, {"order", o.order},
                   {"format", o.format}, {"trace", trace}};
    Json env = envelope("t1", inputs, result);
    if (trace) {
        env["trace"] = Json::array();
        for (const auto& [m, dim] : table.entries)
            env["trace"].push_back({{"weight", m}, {"dimension", dim}, {"rule", rule.rule}, {"anchor", rule.anchor}});
    }
    out << env.dump(2) << '\n';
}

struct RigidityOptions {
    std::string descriptor;
    std::string weights = std::to_string(default_window_lo) + ".." + std::to_string(default_window_hi);
    bool trace = false;
};

void cmd_rigidity(const RigidityOptions& o, std::ostream& out) {
    const auto v = parse_descriptor(o.descriptor);
    const auto [lo, hi] = parse_window(o.weights);
    const bool trace = o.trace || trace_from_env();
    const auto verdict = rigidity_verdict(v, lo, hi);

    Json result;
    result["variety"] = variety_json(v);
    result["rigid"] = verdict.rigid ? Json(*verdict.rigid) : Json(nullptr);
    result["witness"] = verdict.witness ? Json{{"weight", verdict.witness->first}, {"dim", verdict.witness->second}}
                                        : Json(nullptr);
    result["window"] = window_json(lo, hi);
    result["window_independent"] = verdict.window_independent;
    result["basis"] = verdict.basis;
    result["certificate"] = certificate_json(verdict.certificate);

    Json inputs = {{"descriptor", o.descriptor}, {"weights", window_json(lo, hi)}, {"trace", trace}};
    Json env = envelope("rigidity", inputs, result);
    if (trace) {
        env["trace"] = Json::array();
        for (const auto& s : verdict.certificate.steps)
            env["trace"].push_back(s.lemma + " | " + s.term + " | " + to_string(s.status) + " | " + s.anchor);
    }
    out << env.dump(2) << '\n';
}

struct JacobianOptions {
    int d = 0;
    std::optional<int> weight;
    bool dump_matrix = false;
};

void cmd_jacobian(const JacobianOptions& o, std::ostream& out) {
    if (o.d < 2) throw UsageError("--d must be at least 2 (the curve of degree " + std::to_string(o.d) + " has no quadrics)");
    if (!o.weight && !o.dump_matrix) throw UsageError("jacobian needs --dump-matrix or --weight");

    Json result;
    result["d"] = o.d;
    if (o.dump_matrix) {
        const auto p = rnc::build_presentation(o.d);
        const auto j = rnc::jacobian_matrix(p);
        Json m;
        m["rows"] = j.rows;
        m["cols"] = j.cols;
        m["generators"] = Json::array();
        for (const auto& q : p.generators) m["generators"].push_back(q.to_string("z"));
        m["entries"] = Json::array();
        for (std::size_t r = 0; r < j.rows; ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < j.cols; ++c) row.push_back(j(r, c).to_string("z"));
            m["entries"].push_back(row);
        }
        result["matrix"] = m;
    }
    if (o.weight) {
        const int m = *o.weight;
        const auto a = rnc::assembled_jacobian_map(o.d, m);
        const auto route = rnc::t1_via_normal(o.d, m);
        Json w;
        w["weight"] = m;
        w["source_h0"] = a.source_h0;
        w["target_h0"] = a.target_h0;
        w["rank"] = a.rank;
        w["t1"] = route.t1;
        w["exact"] = route.exact;
        w["cokernel"] = a.cokernel;
        w["kernel"] = a.kernel;
        w["polynomial_columns"] = a.polynomial_columns;
        w["lifted_columns"] = a.lifted_columns;
        w["linear_syzygies"] = a.linear_syzygy_count;
        w["derivation_cokernel"] = a.target_h0 - a.derivation_rank;
        result["graded"] = w;
    }
    Json inputs = {{"d", o.d}, {"weight", o.weight ? Json(*o.weight) : Json(nullptr)}, {"dump_matrix", o.dump_matrix}};
    out << envelope("jacobian", inputs, result).dump(2) << '\n';
}

void cmd_cech(int k, std::ostream& out) {
    Json result;
    result["degree"] = k;
    for (int i = 0; i <= 1; ++i) {
        const std::string key = "h" + std::to_string(i);
        result[key] = cech::h_dim(i, k);
    }
    Json basis;
    for (int i = 0; i <= 1; ++i) {
        Json list = Json::array();
        for (const auto& mono : cech::basis(i, k)) list.push_back({mono.a, mono.b});
        basis["h" + std::to_string(i)] = list;
    }
    result["basis"] = basis;
    out << envelope("cech", {{"degree", k}}, result).dump(2) << '\n';
}

void cmd_atiyah(int n, std::ostream& out) {
    if (n < 2) throw UsageError("--n must be at least 2, got " + std::to_string(n));
    const auto r = proj::atiyah_cocycle_check(n);
    Json result;
    result["n"] = r.n;
    result["triples"] = r.triples;
    result["identities_checked"] = r.identities_checked;
    result["multiplicative_ok"] = r.multiplicative_ok;
    result["additive_ok"] = r.additive_ok;
    result["diagonal_ok"] = r.diagonal_ok;
    result["pass"] = r.pass;
    out << envelope("atiyah", {{"n", n}}, result).dump(2) << '\n';
}

}  // namespace

cone::PolarizedVariety parse_descriptor(const std::string& text) {
    const auto parts = split(text, ':');
    const std::string& kind = parts.front();
    auto expect = [&](std::size_t count) {
        if (parts.size() != count + 1)
            throw UsageError("descriptor '" + text + "': '" + kind + "' takes " + std::to_string(count) +
                             " parameter(s)");
    };
    auto arg = [&](std::size_t i) { return parse_int(parts[i], text); };
    cone::PolarizedVariety v;
    if (kind == "rnc") {
        expect(1);
        v = RationalNormalCurve{arg(1)};
    } else if (kind == "veronese") {
        expect(2);
        v = VeroneseProjectiveSpace{arg(1), arg(2)};
    } else if (kind == "segre") {
        expect(1);
        v = SegreProduct{arg(1)};
    } else if (kind == "product") {
        expect(2);
        v = ProductBundle{arg(1), arg(2)};
    } else if (kind == "delpezzo") {
        expect(1);
        v = DelPezzo{arg(1)};
    } else {
        throw UsageError("unknown variety '" + kind + "' in descriptor '" + text + "'");
    }
    try {
        validate(v);
    } catch (const std::invalid_argument& e) {
        throw UsageError("descriptor '" + text + "': " + e.what());
    }
    return v;
}

std::pair<int, int> parse_window(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) throw UsageError("weight window '" + text + "' must look like lo..hi");
    const int lo = parse_int(text.substr(0, pos), text);
    const int hi = parse_int(text.substr(pos + 2), text);
    if (lo > hi) throw UsageError("weight window '" + text + "' is inverted");
    return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact graded T^1 / T^2 calculator for affine cones over polarized varieties"};
    app.name("conedef");
    app.require_subcommand(1);

    T1Options t1;
    auto* t1_cmd = app.add_subcommand("t1", "graded T^1 (or T^2) table over a weight window");
    t1_cmd->add_option("descriptor", t1.descriptor, "rnc:d | veronese:n:d | segre:d | product:a:b | delpezzo:r")
        ->required();
    t1_cmd->add_option("--weights", t1.weights, "inclusive window lo..hi")->capture_default_str();
    t1_cmd->add_option("--order", t1.order, "1 for T^1, 2 for T^2")->check(CLI::IsMember({1, 2}))->capture_default_str();
    t1_cmd->add_option("--format", t1.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    t1_cmd->add_flag("--trace", t1.trace, "append the rule used for each weight");

    RigidityOptions rig;
    auto* rig_cmd = app.add_subcommand("rigidity", "rigidity verdict with witness and certificate");
    rig_cmd->add_option("descriptor", rig.descriptor, "variety descriptor")->required();
    rig_cmd->add_option("--weights", rig.weights, "inclusive search window lo..hi")->capture_default_str();
    rig_cmd->add_flag("--trace", rig.trace, "append one line per certificate step");

    JacobianOptions jac;
    int weight_value = 0;
    auto* jac_cmd = app.add_subcommand("jacobian", "Jacobian of the rational normal curve ideal");
    jac_cmd->add_option("--d", jac.d, "degree of the curve")->required();
    auto* weight_opt = jac_cmd->add_option("--weight", weight_value, "graded piece to assemble");
    jac_cmd->add_flag("--dump-matrix", jac.dump_matrix, "print the polynomial Jacobian");

    int cech_k = 0;
    auto* cech_cmd = app.add_subcommand("cech", "Cech cohomology of O(k) on P^1");
    cech_cmd->add_option("--degree", cech_k, "twist k")->required();

    int atiyah_n = 0;
    auto* atiyah_cmd = app.add_subcommand("atiyah", "check the Atiyah cocycle on P^n");
    atiyah_cmd->add_option("--n", atiyah_n, "projective dimension")->required();

    if (!args.empty() && !args.front().empty() && args.front().front() != '-' && !app.get_subcommand_no_throw(args.front())) {
        err << "error: unknown command '" << args.front() << "'\n";
        return exit_usage;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*t1_cmd) cmd_t1(t1, out);
        if (*rig_cmd) cmd_rigidity(rig, out);
        if (*jac_cmd) {
            if (*weight_opt) jac.weight = weight_value;
            cmd_jacobian(jac, out);
        }
        if (*cech_cmd) cmd_cech(cech_k, out);
        if (*atiyah_cmd) cmd_atiyah(atiyah_n, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const OutOfScopeError& e) {
        err << "out of scope: " << e.what() << '\n';
        return exit_out_of_scope;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_ok;
}

}  // namespace conedef::cli
