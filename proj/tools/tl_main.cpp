// Command-line frontend: basis listings, diagram multiplication, Davis
// complex workflows, Tor computations and the theorem verification suites.
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tl/algebra.hpp"
#include "tl/chain_complex.hpp"
#include "tl/davis.hpp"
#include "tl/diagram.hpp"
#include "tl/tor.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    int strands = 2;
    std::string ring = "Z";
    std::string parameter = "0";
    int max_degree = 3;
    std::string output = "pretty";
    std::size_t budget = tl::BarOptions{}.budget;
    unsigned long seed = 0;
    std::string dump_complex;
};

void add_strands(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("-s,--strands", cfg.strands, "strand count (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
}

void add_ring(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--ring", cfg.ring, "coefficient ring: Z, Q or Fp:<p>");
    cmd->add_option("-a,--parameter", cfg.parameter, "algebra parameter a");
}

void add_output(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--output", cfg.output, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
}

ordered_json presentation_json(const tl::ModulePresentation& p) {
    ordered_json torsion = ordered_json::array();
    for (const auto& d : p.torsion)
        torsion.push_back(d.get_str());
    return ordered_json{{"free_rank", p.free_rank}, {"torsion", torsion}};
}

ordered_json homology_json(const std::vector<tl::DegreeHomology>& homology) {
    ordered_json rows = ordered_json::array();
    for (const auto& h : homology) {
        ordered_json row = presentation_json(h.presentation);
        row["truncated"] = h.truncated;
        ordered_json full;
        full["degree"] = h.degree;
        full.update(row);
        rows.push_back(std::move(full));
    }
    return rows;
}

ordered_json checks_json(const std::vector<tl::CheckResult>& checks) {
    ordered_json rows = ordered_json::array();
    for (const auto& c : checks)
        rows.push_back(ordered_json{{"name", c.name}, {"status", c.status},
                                    {"detail", c.detail}});
    return rows;
}

ordered_json report_header(const RunConfig& cfg, const tl::RingSpec& ring,
                           const std::string& method) {
    ordered_json j;
    j["strands"] = cfg.strands;
    j["ring"] = ring.description();
    j["parameter"] = tl::scalar_to_string(ring.parameter());
    j["method"] = method;
    return j;
}

std::string torsion_csv(const tl::ModulePresentation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.torsion.size(); ++i) {
        if (i)
            out += ";";
        out += p.torsion[i].get_str();
    }
    return out;
}

void emit_homology_report(const RunConfig& cfg, const tl::RingSpec& ring,
                          const std::string& method,
                          const std::vector<tl::DegreeHomology>& homology,
                          const std::vector<tl::CheckResult>& checks) {
    if (cfg.output == "json") {
        ordered_json j = report_header(cfg, ring, method);
        j["homology"] = homology_json(homology);
        j["checks"] = checks_json(checks);
        std::cout << j.dump(2) << "\n";
    } else if (cfg.output == "csv") {
        std::cout << "strands,ring,a,degree,free_rank,torsion\n";
        for (const auto& h : homology)
            std::cout << cfg.strands << "," << ring.description() << ","
                      << tl::scalar_to_string(ring.parameter()) << "," << h.degree << ","
                      << h.presentation.free_rank << "," << torsion_csv(h.presentation)
                      << "\n";
    } else {
        std::cout << "TL_" << cfg.strands << " over " << ring.description()
                  << ", a = " << tl::scalar_to_string(ring.parameter()) << ", method "
                  << method << "\n";
        for (const auto& h : homology)
            std::cout << "  H_" << h.degree << " = "
                      << tl::presentation_to_string(h.presentation, ring)
                      << (h.truncated ? "  [top truncation degree: unreliable]" : "")
                      << "\n";
        for (const auto& c : checks)
            std::cout << "  " << c.status << " " << c.name << ": " << c.detail << "\n";
    }
}

void emit_checks_report(const RunConfig& cfg, const tl::RingSpec& ring,
                        const std::string& method,
                        const std::vector<tl::CheckResult>& checks) {
    if (cfg.output == "json") {
        ordered_json j = report_header(cfg, ring, method);
        j["checks"] = checks_json(checks);
        std::cout << j.dump(2) << "\n";
    } else if (cfg.output == "csv") {
        std::cout << "strands,ring,a,check,status\n";
        for (const auto& c : checks)
            std::cout << cfg.strands << "," << ring.description() << ","
                      << tl::scalar_to_string(ring.parameter()) << "," << c.name << ","
                      << c.status << "\n";
    } else {
        std::cout << "TL_" << cfg.strands << " over " << ring.description()
                  << ", a = " << tl::scalar_to_string(ring.parameter()) << "\n";
        for (const auto& c : checks)
            std::cout << "  " << c.status << " " << c.name << ": " << c.detail << "\n";
    }
}

int run_basis(const RunConfig& cfg) {
    tl::DiagramAlgebra algebra(cfg.strands);
    if (cfg.output == "json") {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < algebra.size(); ++i)
            rows.push_back(ordered_json{{"index", i},
                                        {"diagram", algebra.diagram(i).encode()},
                                        {"right_cups", algebra.cups(i)}});
        ordered_json j;
        j["strands"] = cfg.strands;
        j["count"] = algebra.size();
        j["basis"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
    } else if (cfg.output == "csv") {
        std::cout << "index,diagram,right_cups\n";
        for (std::size_t i = 0; i < algebra.size(); ++i) {
            std::string cups;
            for (std::size_t k = 0; k < algebra.cups(i).size(); ++k)
                cups += (k ? ";" : "") + std::to_string(algebra.cups(i)[k]);
            std::cout << i << "," << algebra.diagram(i).encode() << "," << cups << "\n";
        }
    } else {
        std::cout << "TL_" << cfg.strands << " diagram basis, " << algebra.size()
                  << " elements\n";
        for (std::size_t i = 0; i < algebra.size(); ++i) {
            tl::InnermostSet cups(cfg.strands - 1, algebra.cups(i));
            std::cout << "  " << i << "  " << algebra.diagram(i).encode() << "  F="
                      << cups.encode() << "\n";
        }
    }
    return 0;
}

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> word;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size())
                throw std::invalid_argument("");
            word.push_back(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad generator index '" + token + "'");
        }
    }
    return word;
}

int run_mul(const RunConfig& cfg, const std::string& word_text) {
    std::vector<int> word = parse_word(word_text);
    for (int i : word)
        if (i < 0 || i > cfg.strands - 2)
            throw std::invalid_argument("generator index " + std::to_string(i) +
                                        " out of range for s = " + std::to_string(cfg.strands));
    auto [diagram, exponent] = tl::diagram_from_word(cfg.strands, word);
    tl::DiagramAlgebra algebra(cfg.strands);
    std::size_t index = algebra.index_of(diagram);
    if (cfg.output == "json") {
        ordered_json j;
        j["strands"] = cfg.strands;
        j["word"] = word;
        j["product"] = diagram.encode();
        j["index"] = index;
        j["right_cups"] = tl::right_cups(diagram);
        j["loop_exponent"] = exponent;
        std::cout << j.dump(2) << "\n";
    } else if (cfg.output == "csv") {
        std::cout << "strands,product,index,loop_exponent\n";
        std::cout << cfg.strands << "," << diagram.encode() << "," << index << ","
                  << exponent << "\n";
    } else {
        std::cout << "product  " << diagram.encode() << "  (basis index " << index
                  << ")\n";
        std::cout << "a-exponent  " << exponent << "\n";
    }
    return 0;
}

int run_davis(const RunConfig& cfg, const std::string& action) {
    tl::RingSpec ring = tl::RingSpec::parse(cfg.ring, cfg.parameter);
    tl::DiagramAlgebra algebra(cfg.strands);
    tl::DavisComplex dc = tl::build_davis(algebra, ring);

    if (!cfg.dump_complex.empty()) {
        std::ofstream out(cfg.dump_complex);
        if (!out)
            throw std::invalid_argument("cannot write " + cfg.dump_complex);
        out << tl::complex_to_json(dc.complex) << "\n";
    }

    if (action == "build") {
        if (cfg.output == "json") {
            std::cout << tl::complex_to_json(dc.complex) << "\n";
        } else if (cfg.output == "csv") {
            std::cout << "degree,rank\n";
            for (std::size_t k = 0; k < dc.complex.ranks.size(); ++k)
                std::cout << k << "," << dc.complex.ranks[k] << "\n";
        } else {
            std::cout << "Davis complex of TL_" << cfg.strands << ": ranks";
            for (auto r : dc.complex.ranks)
                std::cout << " " << r;
            std::cout << ", " << "top degree " << dc.complex.top_degree() << "\n";
        }
        return 0;
    }

    if (action == "check") {
        std::vector<tl::CheckResult> checks;
        int bad = 0;
        bool d2 = tl::verify_d_squared(dc.complex, &bad);
        checks.push_back({"d-squared", d2 ? "PASS" : "FAIL",
                          d2 ? "all composites vanish"
                             : "fails at degree " + std::to_string(bad)});

        bool split_ok = true;
        std::string split_detail = std::to_string(algebra.size()) + " subcomplexes";
        for (std::size_t d = 0; d < algebra.size() && split_ok; ++d) {
            auto sub_h = tl::homology(tl::subcomplex_of_diagram(dc, d));
            for (std::size_t k = 0; k < sub_h.size(); ++k) {
                bool expect_unit = (d == algebra.identity_index() && k == 0);
                bool ok = expect_unit
                              ? (sub_h[k].free_rank == 1 && sub_h[k].torsion.empty())
                              : sub_h[k].is_zero();
                if (!ok) {
                    split_ok = false;
                    split_detail = "diagram " + algebra.diagram(d).encode() +
                                   " has homology in degree " + std::to_string(k);
                    break;
                }
            }
        }
        checks.push_back({"subcomplex-splitting", split_ok ? "PASS" : "FAIL", split_detail});

        // im(delta_1) must be exactly the span of the non-identity diagrams.
        bool image_ok = true;
        std::vector<bool> hit(dc.complex.ranks[0], false);
        if (dc.complex.top_degree() >= 1) {
            const auto& d1 = dc.complex.differentials[1];
            for (std::size_t c = 0; c < d1.cols(); ++c) {
                const auto& col = d1.column(c);
                if (col.size() != 1 || col[0].second != 1)
                    image_ok = false;
                else
                    hit[col[0].first] = true;
            }
        }
        for (std::size_t r = 0; r < hit.size(); ++r) {
            bool is_id = algebra.diagram(dc.basis_element(0, r).diagram_index).is_identity();
            if (hit[r] == is_id)
                image_ok = false;
        }
        checks.push_back({"image-of-delta1", image_ok ? "PASS" : "FAIL",
                          image_ok ? "columns cover exactly the non-identity diagrams"
                                   : "column space mismatch"});

        emit_checks_report(cfg, ring, "davis-check", checks);
        bool pass = true;
        for (const auto& c : checks)
            pass = pass && c.status != "FAIL";
        return pass ? 0 : 1;
    }

    // action == "homology"
    auto h = tl::homology(dc.complex);
    std::vector<tl::DegreeHomology> rows;
    for (std::size_t k = 0; k < h.size(); ++k)
        rows.push_back({static_cast<int>(k), h[k], false});
    emit_homology_report(cfg, ring, "davis-complex", rows, {});
    return 0;
}

tl::InnermostSet parse_coefficients(const std::string& text, int strands) {
    if (text.rfind("cup:", 0) != 0)
        throw std::invalid_argument("coefficients must be 'trivial' or 'cup:<i,j,...>'");
    std::vector<int> members;
    std::string rest = text.substr(4);
    std::istringstream in(rest);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            members.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad cup index '" + token + "'");
        }
    }
    return tl::InnermostSet(strands - 1, std::move(members));
}

int run_tor(const RunConfig& cfg, const std::string& method, const std::string& coefficients) {
    tl::RingSpec ring = tl::RingSpec::parse(cfg.ring, cfg.parameter);
    tl::DiagramAlgebra algebra(cfg.strands);
    tl::BarOptions options{cfg.max_degree, cfg.budget};

    const bool trivial_coeffs = coefficients == "trivial";
    if ((method == "davis" || method == "both") && !trivial_coeffs)
        throw std::invalid_argument("the davis method computes trivial coefficients only");

    tl::LeftModuleData N = trivial_coeffs
                               ? tl::trivial_module(algebra, ring)
                               : tl::cup_module(algebra,
                                                parse_coefficients(coefficients, cfg.strands),
                                                ring);

    std::vector<tl::CheckResult> checks;
    int exit_code = 0;
    std::vector<tl::DegreeHomology> rows;

    if (method == "davis") {
        tl::TorResult davis = tl::davis_tor(algebra, ring);
        rows = davis.homology;
    } else if (method == "bar") {
        tl::TorResult bar = tl::bar_tor(algebra, ring, N, options);
        rows = bar.homology;
        if (bar.budget_limited)
            checks.push_back({"budget", "SKIP",
                              "truncated to degree " + std::to_string(bar.truncation_degree) +
                                  " by the size budget"});
    } else {
        tl::TorResult davis = tl::davis_tor(algebra, ring);
        tl::TorResult bar = tl::bar_tor(algebra, ring, N, options);
        bool agree = true;
        for (int k = 0; k <= std::min(bar.truncation_degree, davis.truncation_degree); ++k)
            agree = agree && bar.at(k) == davis.at(k);
        for (int k = davis.truncation_degree + 1; k <= bar.truncation_degree; ++k)
            agree = agree && bar.at(k).is_zero();
        // The finite resolution is exact, so degrees above its top vanish.
        rows = davis.homology;
        for (int k = davis.truncation_degree + 1; k <= bar.truncation_degree; ++k)
            rows.push_back({k, tl::ModulePresentation{}, false});
        std::string detail = "bar computed degrees 0.." + std::to_string(bar.truncation_degree);
        checks.push_back({"method-agreement", agree ? "PASS" : "FAIL", detail});
        if (!agree)
            exit_code = 1;
    }

    emit_homology_report(cfg, ring, method, rows, checks);
    return exit_code;
}

int run_verify(const RunConfig& cfg, const std::string& theorem) {
    tl::RingSpec ring = tl::RingSpec::parse(cfg.ring, cfg.parameter);
    tl::DiagramAlgebra algebra(cfg.strands);
    tl::BarOptions options{cfg.max_degree, cfg.budget};

    tl::TheoremReport report =
        theorem == "all" ? tl::verify_all(algebra, ring, options, cfg.seed)
                         : tl::verify_theorem(algebra, ring, theorem[0], options);
    emit_checks_report(cfg, ring, "verify-" + theorem, report.checks);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homology computations for Temperley-Lieb algebras"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string word_text;
    std::string davis_action;
    std::string method = "bar";
    std::string coefficients = "trivial";
    std::string theorem = "all";

    CLI::App* basis = app.add_subcommand("basis", "list the diagram basis");
    add_strands(basis, cfg);
    add_output(basis, cfg);

    CLI::App* mul = app.add_subcommand("mul", "multiply a word of generators");
    add_strands(mul, cfg);
    add_output(mul, cfg);
    mul->add_option("word", word_text, "generator indices, e.g. \"0 2 1\"");

    CLI::App* davis = app.add_subcommand("davis", "cellular Davis complex workflows");
    davis->add_option("action", davis_action, "build, check or homology")
        ->required()
        ->check(CLI::IsMember({"build", "check", "homology"}));
    add_strands(davis, cfg);
    add_ring(davis, cfg);
    add_output(davis, cfg);
    davis->add_option("--dump-complex", cfg.dump_complex, "write the complex JSON to a file");

    CLI::App* tor = app.add_subcommand("tor", "Tor / algebra homology computations");
    add_strands(tor, cfg);
    add_ring(tor, cfg);
    add_output(tor, cfg);
    tor->add_option("--method", method, "davis, bar or both")
        ->check(CLI::IsMember({"davis", "bar", "both"}));
    tor->add_option("--coefficients", coefficients, "trivial or cup:<i,j,...>");
    tor->add_option("--max-degree", cfg.max_degree, "bar truncation degree")
        ->check(CLI::PositiveNumber);
    tor->add_option("--budget", cfg.budget, "nonzero-entry cap per differential");

    CLI::App* verify = app.add_subcommand("verify", "verify the vanishing theorems");
    add_strands(verify, cfg);
    add_ring(verify, cfg);
    add_output(verify, cfg);
    verify->add_option("--theorem", theorem, "a, b, c, d or all")
        ->check(CLI::IsMember({"a", "b", "c", "d", "all"}));
    verify->add_option("--max-degree", cfg.max_degree, "bar truncation degree")
        ->check(CLI::PositiveNumber);
    verify->add_option("--budget", cfg.budget, "nonzero-entry cap per differential");
    verify->add_option("--seed", cfg.seed, "seed for the fuzz checks");

    try {
        app.parse(argc, argv);
        if (basis->parsed())
            return run_basis(cfg);
        if (mul->parsed())
            return run_mul(cfg, word_text);
        if (davis->parsed())
            return run_davis(cfg, davis_action);
        if (tor->parsed())
            return run_tor(cfg, method, coefficients);
        if (verify->parsed())
            return run_verify(cfg, theorem);
        return 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
}
