#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "twistforge/errors.hpp"
#include "twistforge/io.hpp"

using namespace twistforge;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

const std::vector<std::string> kModelChecks = {
    "te", "split", "ybe", "theorem2", "hopf", "cocycle", "quasi", "frt"};

struct Output {
    std::string format = "text";
    std::vector<Report> reports;
    json extra = json::object();

    int flush(const std::string& header, int n, int d) {
        bool all_pass = true;
        for (const auto& r : reports) all_pass = all_pass && r.passed();
        if (format == "json") {
            json j;
            j["subject"] = header;
            j["N"] = n;
            j["D"] = d;
            json rs = json::array();
            for (const auto& r : reports) rs.push_back(report_to_json(r));
            j["reports"] = rs;
            for (const auto& [key, value] : extra.items()) j[key] = value;
            j["pass"] = all_pass;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << header << " (N=" << n;
            if (d > 0) std::cout << ", D=" << d;
            std::cout << ")\n";
            std::cout << "all identities verified to tensor degree N=" << n;
            if (d > 0) std::cout << ", series to degree D=" << d;
            std::cout << "\n";
            for (const auto& r : reports) r.print_text(std::cout);
            std::cout << (all_pass ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
        }
        return all_pass ? kExitPass : kExitFail;
    }
};

int run_validate(const std::string& path) {
    json j = load_json_file(path);
    ValidationReport rep;
    std::string name;
    if (detect_spec_kind(j) == SpecKind::ring) {
        RingPtr ring = ring_from_json(j);
        name = ring->name();
        rep = validate_ring(*ring);
    } else {
        LieRingSpec lie = lie_ring_from_json(j);
        name = lie.name;
        rep = validate_lie_ring(lie);
    }
    std::cout << (rep.pass ? "[PASS] " : "[FAIL] ") << name << ": " << rep.message << "\n";
    if (!rep.pass && rep.witness) {
        const auto& w = *rep.witness;
        std::cout << "witness triple: (" << w[0] << "," << w[1] << "," << w[2] << ")\n";
    }
    return rep.pass ? kExitPass : kExitFail;
}

int run_model(const std::string& path, int n, int d, std::vector<std::string> checks,
              const std::string& format) {
    if (n < 2 || d < 2) {
        std::cerr << "error: require N >= 2 and D >= 2\n";
        return kExitInput;
    }
    if (checks.empty()) checks = kModelChecks;
    for (const auto& c : checks)
        if (std::find(kModelChecks.begin(), kModelChecks.end(), c) == kModelChecks.end()) {
            std::cerr << "error: unknown check '" << c << "'\n";
            return kExitInput;
        }
    json j = load_json_file(path);
    if (detect_spec_kind(j) != SpecKind::lie_ring) {
        std::cerr << "error: 'model' expects a Lie ring spec\n";
        return kExitInput;
    }
    LieRingSpec lie = lie_ring_from_json(j);
    InhomModel model = build_model(lie, d, n);
    generator_lifts(model);
    auto selected = [&](const std::string& c) {
        return std::find(checks.begin(), checks.end(), c) != checks.end();
    };

    Output out;
    out.format = format;
    if (selected("te")) out.reports.push_back(verify_te(*model.twist_rec));
    if (selected("split")) {
        Report rep;
        rep.check = "split";
        rep.params["ring"] = lie.name;
        QTStructure qt = QTStructure::trivial(model.R);
        rep.add("split2 with trivial R", check_split2(model.phi11, qt));
        rep.add("split1 with trivial R", check_split1(model.phi11, qt));
        out.reports.push_back(std::move(rep));
    }
    if (selected("ybe")) {
        Report rep;
        rep.check = "ybe";
        rep.params["ring"] = lie.name;
        rep.add("rtilde satisfies the Yang-Baxter equation", ybe_check(model.rtilde));
        TensorElement prod = mul(block_swap(model.rtilde, 1, 1), model.rtilde);
        rep.add("rtilde_21 rtilde = E(x)E",
                prod == TensorElement::idempotent(model.R, 2));
        out.reports.push_back(std::move(rep));
    }
    if (selected("theorem2")) out.reports.push_back(verify_theorem2(model));
    if (selected("hopf")) out.reports.push_back(verify_hopf_structure(model));
    if (selected("cocycle")) out.reports.push_back(verify_group_cocycle(model));
    if (selected("quasi")) out.reports.push_back(verify_quasitriangularity(model));
    if (selected("frt")) {
        out.reports.push_back(verify_frt_suite(model));
        out.extra["frt_relations"] = relation_set_to_json(extract_rtt(model));
    }
    return out.flush("model " + lie.name, n, d);
}

int run_twist(const std::string& ring_path, const std::string& fusion_path,
              const std::string& seeds_path, const std::string& qt_path, int n,
              const std::string& format) {
    if (n < 2) {
        std::cerr << "error: require N >= 2\n";
        return kExitInput;
    }
    json j = load_json_file(ring_path);
    if (detect_spec_kind(j) != SpecKind::ring) {
        std::cerr << "error: 'twist' expects a ring spec\n";
        return kExitInput;
    }
    RingPtr ring = ring_from_json(j);
    ValidationReport vrep = validate_ring(*ring);
    if (!vrep.pass) {
        std::cerr << "error: " << vrep.message << "\n";
        return kExitInput;
    }
    std::vector<TensorElement> seeds;
    if (!fusion_path.empty()) {
        TensorElement phi11 = tensor_from_json(load_json_file(fusion_path), ring);
        seeds = fusion_seeds(phi11, n);
    } else {
        seeds = seeds_from_json(load_json_file(seeds_path), ring);
    }
    GradedTwist t = build_from_seeds(seeds, n);
    Output out;
    out.format = format;
    out.reports.push_back(verify_te(t));
    if (!qt_path.empty()) {
        QTStructure qt(tensor_from_json(load_json_file(qt_path), ring));
        out.reports.push_back(verify_membership(t, qt));
    }
    return out.flush("twist over " + ring->name(), n, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact twisting-cocycle constructions and verification in truncated "
                 "tensor bialgebras"};
    app.require_subcommand(1);

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "validate a ring or Lie ring spec");
    validate->add_option("spec", validate_path, "spec file (JSON)")->required();

    std::string model_path, model_format = "text", model_checks_csv;
    int model_n = 4, model_d = 5;
    CLI::App* model = app.add_subcommand("model", "build and verify the derived model");
    model->add_option("spec", model_path, "Lie ring spec file (JSON)")->required();
    model->add_option("--N", model_n, "truncation cutoff (default 4)");
    model->add_option("--D", model_d, "series cap (default 5)");
    model->add_option("--checks", model_checks_csv, "comma-separated subset of checks");
    model->add_option("--format", model_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string twist_path, twist_fusion, twist_seeds, twist_qt, twist_format = "text";
    int twist_n = 4;
    CLI::App* twist = app.add_subcommand("twist", "build a twist from seeds and verify");
    twist->add_option("spec", twist_path, "ring spec file (JSON)")->required();
    CLI::Option* fo = twist->add_option("--fusion", twist_fusion, "phi11 tensor file");
    CLI::Option* so = twist->add_option("--seeds", twist_seeds, "seeds file");
    fo->excludes(so);
    twist->add_option("--qt", twist_qt, "degree-2 R-matrix file for membership checks");
    twist->add_option("--N", twist_n, "truncation cutoff (default 4)");
    twist->add_option("--format", twist_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*validate) return run_validate(validate_path);
        if (*model) {
            std::vector<std::string> checks;
            if (!model_checks_csv.empty()) {
                size_t pos = 0;
                while (pos <= model_checks_csv.size()) {
                    size_t comma = model_checks_csv.find(',', pos);
                    if (comma == std::string::npos) comma = model_checks_csv.size();
                    if (comma > pos) checks.push_back(model_checks_csv.substr(pos, comma - pos));
                    pos = comma + 1;
                }
            }
            return run_model(model_path, model_n, model_d, checks, model_format);
        }
        if (*twist) {
            if (twist_fusion.empty() && twist_seeds.empty()) {
                std::cerr << "error: provide --fusion or --seeds\n";
                return kExitInput;
            }
            return run_twist(twist_path, twist_fusion, twist_seeds, twist_qt, twist_n,
                             twist_format);
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const not_invertible& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const unsupported_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
