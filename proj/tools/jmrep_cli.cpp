// jmrep: JSON front end to the library. Each verb reads its documents from
// files ("-" for stdin) and writes one compact JSON document to stdout.
// Exit status: 0 true/success, 1 false, 2 malformed input or internal error.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jmrep/jmrep.hpp"

namespace {

using jmrep::io::json;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kBadInput = 2;

json read_doc(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw jmrep::InputError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw jmrep::InputError(path + ": " + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// Matrix documents may carry their rows under "rows" or "R".
jmrep::SymplecticMatrix read_symplectic(const json& j) {
    const auto g = jmrep::io::genus_from_json(j);
    const char* key = j.contains("R") ? "R" : "rows";
    return jmrep::io::detail::symplectic_rows_from_json(g, jmrep::io::detail::field(j, key));
}

bool is_rho2(const json& j) { return j.is_object() && j.contains("R"); }

json triples_to_json(const std::vector<jmrep::Triple>& ts) {
    json out = json::array();
    for (const auto& t : ts) out.push_back(t);
    return out;
}

std::vector<jmrep::Triple> e_odd_triples(const jmrep::SymplecticMatrix& rm) {
    std::vector<jmrep::Triple> out;
    for (const auto& [t, v] : jmrep::compute_E(rm).values)
        if (jmrep::detail::floor_mod(v, 2) != 0) out.push_back(t);
    return out;
}

int check_mcg(const std::vector<std::string>& in) {
    const auto f = jmrep::io::rho2_from_json(read_doc(in.at(0)));
    const auto violations = jmrep::mcg_violations(f);
    json out{{"member", violations.empty()}, {"E_odd_triples", triples_to_json(e_odd_triples(f.R))}};
    if (!violations.empty()) out["violations"] = triples_to_json(violations);
    emit(out);
    return violations.empty() ? kTrue : kFalse;
}

int check_handlebody(const std::vector<std::string>& in) {
    const auto rep = jmrep::handlebody_check(jmrep::io::rho2_from_json(read_doc(in.at(0))));
    emit({{"member", rep.member()}, {"failed", rep.failed()}});
    return rep.member() ? kTrue : kFalse;
}

int lift(const std::vector<std::string>& in) {
    emit(jmrep::io::to_json(jmrep::canonical_lift(read_symplectic(read_doc(in.at(0))))));
    return kTrue;
}

int rho2(const std::vector<std::string>& in) {
    emit(jmrep::io::to_json(jmrep::tau2_from_endo(jmrep::io::endo_from_json(read_doc(in.at(0))))));
    return kTrue;
}

int act(const std::vector<std::string>& in) {
    const auto f = jmrep::io::rho2_from_json(read_doc(in.at(0)));
    const auto p = jmrep::io::phi2_from_json(read_doc(in.at(1)));
    emit(jmrep::io::to_json(jmrep::act_on_phi2(f, p)));
    return kTrue;
}

int eval_word(const std::vector<std::string>& in) {
    emit(jmrep::io::to_json(jmrep::phi2_eval_word(jmrep::io::word_from_json(read_doc(in.at(0))))));
    return kTrue;
}

int phi2_member(const std::vector<std::string>& in, bool (*test)(const jmrep::Phi2Element&)) {
    const bool m = test(jmrep::io::phi2_from_json(read_doc(in.at(0))));
    emit({{"member", m}});
    return m ? kTrue : kFalse;
}

int mul(const std::vector<std::string>& in) {
    const auto a = read_doc(in.at(0)), b = read_doc(in.at(1));
    if (is_rho2(a) != is_rho2(b)) throw jmrep::InputError("mul needs two Rho2 or two Phi2 documents");
    if (is_rho2(a))
        emit(jmrep::io::to_json(jmrep::rho2_mul(jmrep::io::rho2_from_json(a), jmrep::io::rho2_from_json(b))));
    else
        emit(jmrep::io::to_json(jmrep::phi2_mul(jmrep::io::phi2_from_json(a), jmrep::io::phi2_from_json(b))));
    return kTrue;
}

int inv(const std::vector<std::string>& in) {
    const auto a = read_doc(in.at(0));
    if (is_rho2(a))
        emit(jmrep::io::to_json(jmrep::rho2_inv(jmrep::io::rho2_from_json(a))));
    else
        emit(jmrep::io::to_json(jmrep::phi2_inv(jmrep::io::phi2_from_json(a))));
    return kTrue;
}

int compute_e(const std::vector<std::string>& in) {
    emit(jmrep::io::to_json(jmrep::compute_E(read_symplectic(read_doc(in.at(0))))));
    return kTrue;
}

json report_to_json(const jmrep::ValidationReport& rep) {
    return {{"valid", rep.valid()},
            {"checks",
             {{"inverse", rep.inverse}, {"symplectic", rep.symplectic}, {"boundary", rep.boundary}, {"handlebody", rep.handlebody}}},
            {"failures", rep.failures}};
}

int validate_entry(const std::vector<std::string>& in) {
    const auto rep = jmrep::validate_entry(jmrep::io::entry_from_json(read_doc(in.at(0))));
    emit(report_to_json(rep));
    return rep.valid() ? kTrue : kFalse;
}

int basis(const std::vector<std::string>& in) {
    const auto g = jmrep::io::genus_from_json(read_doc(in.at(0)));
    json elems = json::array();
    for (const auto& f : jmrep::torelli_handlebody_basis(g)) elems.push_back(jmrep::io::to_json(f));
    emit({{"genus", g.value()}, {"basis", std::move(elems)}});
    return kTrue;
}

int catalog_list(const std::vector<std::string>& in, const std::string& dir) {
    const auto g = jmrep::io::genus_from_json(read_doc(in.at(0)));
    json entries = json::array();
    for (const auto& c : jmrep::catalog(g, dir.empty() ? jmrep::default_catalog_dir() : std::filesystem::path(dir)))
        entries.push_back(jmrep::io::to_json(c));
    emit({{"genus", g.value()}, {"entries", std::move(entries)}});
    return kTrue;
}

struct Verb {
    std::string help;
    std::size_t arity;
    std::function<int(const std::vector<std::string>&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::string catalog_dir;
    const std::map<std::string, Verb> verbs{
        {"check-mcg", {"Rho2 document -> mapping class group membership", 1, check_mcg}},
        {"check-handlebody", {"Rho2 document -> handlebody membership", 1, check_handlebody}},
        {"lift", {"symplectic matrix -> canonical Rho2 lift", 1, lift}},
        {"rho2", {"endomorphism document -> (tau_2, R)", 1, rho2}},
        {"act", {"Rho2 and Phi2 documents -> action on Phi2", 2, act}},
        {"eval-word", {"word document -> Phi2 image", 1, eval_word}},
        {"phi2-member", {"Phi2 document -> membership in phi_2(pi)", 1,
                         [](const auto& in) { return phi2_member(in, jmrep::phi2_pi_membership); }}},
        {"b-member", {"Phi2 document -> membership in phi_2(b)", 1,
                      [](const auto& in) { return phi2_member(in, jmrep::phi2_b_membership); }}},
        {"mul", {"two Rho2 or two Phi2 documents -> product", 2, mul}},
        {"inv", {"Rho2 or Phi2 document -> inverse", 1, inv}},
        {"compute-E", {"symplectic matrix -> E_ijk", 1, compute_e}},
        {"validate-entry", {"catalog entry -> validation report", 1, validate_entry}},
        {"basis", {"{\"genus\": g} -> Torelli-handlebody basis", 1, basis}},
        {"catalog-list", {"{\"genus\": g} -> validated catalog entries", 1,
                          [&](const auto& in) { return catalog_list(in, catalog_dir); }}},
    };

    CLI::App app{"Second Johnson-Morita representation toolkit"};
    app.require_subcommand(1);
    std::map<std::string, std::vector<std::string>> inputs;
    for (const auto& [name, verb] : verbs) {
        auto* sub = app.add_subcommand(name, verb.help);
        sub->add_option("inputs", inputs[name], "input files, - for stdin")
            ->required()
            ->expected(static_cast<int>(verb.arity));
        if (name == "catalog-list") sub->add_option("--dir", catalog_dir, "catalog root directory");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    const auto* sub = app.get_subcommands().front();
    const auto name = sub->get_name();
    try {
        return verbs.at(name).run(inputs.at(name));
    } catch (const jmrep::Error& e) {
        std::cerr << "jmrep " << name << ": " << e.what() << '\n';
    } catch (const json::exception& e) {
        std::cerr << "jmrep " << name << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "jmrep " << name << ": internal error: " << e.what() << '\n';
    }
    return kBadInput;
}
