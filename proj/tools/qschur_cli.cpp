// Batch driver: basis listings, generator-word application, verification
// suites, oracle cross-checks, decomposition certificates and dimension
// reports.

#include "tqschur/hecke_clifford.hpp"
#include "tqschur/json_io.hpp"
#include "tqschur/repr.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tqs;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        f << text << "\n";
    }
}

Composition parse_mu(const std::string& s) {
    Composition mu;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) mu.push_back(std::stoi(part));
    return mu;
}

GeneratorName parse_generator(const std::string& tok) {
    auto idx_from = [&](size_t pos) { return std::stoi(tok.substr(pos)); };
    if (tok.rfind("Kinv", 0) == 0) return gen_Kinv(idx_from(4));
    if (tok.rfind("Kbar", 0) == 0) return gen_Kbar(idx_from(4));
    if (tok.rfind("Ebar", 0) == 0) return gen_Ebar(idx_from(4));
    if (tok.rfind("Fbar", 0) == 0) return gen_Fbar(idx_from(4));
    if (tok.rfind("K", 0) == 0) return gen_K(idx_from(1));
    if (tok.rfind("E", 0) == 0) return gen_E(idx_from(1));
    if (tok.rfind("F", 0) == 0) return gen_F(idx_from(1));
    throw CLI::ValidationError("--word", "unknown generator token: " + tok);
}

std::vector<GeneratorName> parse_word(const std::string& s) {
    std::vector<GeneratorName> word;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) word.push_back(parse_generator(tok));
    }
    return word;
}

std::string csv_row_of(const SuperMatrixIndex& a) {
    std::ostringstream os;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) os << a.e(i, j) << ",";
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) os << a.o(i, j) << (i == a.n - 1 && j == a.n - 1 ? "" : ",");
    return os.str();
}

int run_basis(int n, int r, const std::string& format, const std::string& out) {
    auto basis = enumerate_basis(n, r);
    if (format == "csv") {
        std::ostringstream os;
        for (auto& a : basis) os << csv_row_of(a) << "\n";
        emit(os.str(), out);
    } else {
        Json rows = Json::array();
        for (auto& a : basis) rows.push_back(to_json(a));
        emit(Json{{"n", n}, {"r", r}, {"count", basis.size()}, {"basis", rows}}.dump(2), out);
    }
    return kExitOk;
}

int run_act(int n, int r, size_t index, const std::string& word_text, const std::string& out) {
    auto basis = enumerate_basis(n, r);
    if (index >= basis.size()) throw CLI::ValidationError("--index", "out of range");
    AlgebraElement x = AlgebraElement::basis(basis[index], r);
    AlgebraElement y = apply_word(parse_word(word_text), x);
    emit(Json{{"n", n}, {"r", r}, {"index", to_json(basis[index])}, {"word", word_text},
              {"result", to_json(y)}}
             .dump(2),
         out);
    return kExitOk;
}

int run_verify(int n, int r, unsigned seed, const std::string& out) {
    CheckReport rels = check_relations(n, r);
    CheckReport props = verify_structure_props(n, r, seed);
    CheckReport surj = check_weight_surjectivity(n, r, seed);
    bool ok = rels.ok() && props.ok() && surj.ok();
    emit(Json{{"n", n},
              {"r", r},
              {"relations", to_json(rels)},
              {"structure", to_json(props)},
              {"weight_surjectivity", to_json(surj)},
              {"ok", ok}}
             .dump(2),
         out);
    return ok ? kExitOk : kExitVerifyFail;
}

int run_oracle_check(int n, int r, int max_r, bool include_derived, const std::string& out) {
    if (r > max_r) {
        emit(Json{{"refused", true},
                  {"reason", "r exceeds --oracle-max-r; the Hecke-Clifford model grows as 2^r r!"}}
                 .dump(2),
             out);
        return kExitGuard;
    }
    std::vector<GeneratorName> gens;
    for (int i = 1; i <= n; ++i) {
        gens.push_back(gen_K(i));
        gens.push_back(gen_Kinv(i));
    }
    for (int j = 1; j < n; ++j) {
        gens.push_back(gen_E(j));
        gens.push_back(gen_F(j));
    }
    gens.push_back(gen_Kbar(n));
    if (include_derived) {
        for (int j = 1; j < n; ++j) {
            gens.push_back(gen_Ebar(j));
            gens.push_back(gen_Fbar(j));
        }
        for (int i = 1; i < n; ++i) gens.push_back(gen_Kbar(i));
    }
    Json mismatches = Json::array();
    int checked = 0;
    for (auto& g : gens) {
        AlgebraElement image = generator_image(g, n, r);
        for (auto& a : enumerate_basis(n, r)) {
            ++checked;
            AlgebraElement formula = act_generator(g, AlgebraElement::basis(a, r));
            AlgebraElement oracle = oracle_act(image, a);
            if (!(formula == oracle))
                mismatches.push_back(Json{{"generator", g.str()}, {"index", to_json(a)}});
        }
    }
    emit(Json{{"n", n}, {"r", r}, {"checked", checked}, {"mismatches", mismatches}}.dump(2), out);
    return mismatches.empty() ? kExitOk : kExitVerifyFail;
}

int run_decompose(int n, int r, const std::string& mu_text, unsigned seed, bool include_derived,
                  const std::string& out) {
    std::vector<Composition> mus;
    if (!mu_text.empty()) {
        Composition mu = parse_mu(mu_text);
        if (static_cast<int>(mu.size()) != n || composition_sum(mu) != r)
            throw CLI::ValidationError("--mu", "not a composition of r into n parts");
        mus.push_back(mu);
    } else {
        mus = enumerate_compositions(n, r);
    }
    Json certs = Json::array();
    bool ok = true;
    for (auto& mu : mus) {
        DecompositionCertificate cert = decompose_block(mu, r, seed, include_derived);
        ok = ok && cert.passed();
        certs.push_back(to_json(cert));
    }
    emit((certs.size() == 1 ? certs[0] : Json{{"certificates", certs}, {"ok", ok}}).dump(2), out);
    return ok ? kExitOk : kExitVerifyFail;
}

int run_report(int n, int r, unsigned seed, const std::string& format, const std::string& out) {
    std::ostringstream csv;
    Json blocks = Json::array();
    size_t total = 0, summand_total = 0;
    csv << "mu,block_dim,summands\n";
    for (auto& mu : enumerate_compositions(n, r)) {
        BlockModule blk = build_block(mu, r);
        DecompositionCertificate cert = decompose_block(mu, r, seed);
        total += blk.basis.dim();
        summand_total += cert.summands.size();
        Json wdims = Json::array();
        for (auto& [w, ws] : blk.weights)
            wdims.push_back(Json{{"weight", w}, {"dim", ws.dim()}});
        blocks.push_back(Json{{"mu", mu},
                              {"dim", blk.basis.dim()},
                              {"weights", wdims},
                              {"summands", cert.summands.size()}});
        std::ostringstream mus;
        for (size_t i = 0; i < mu.size(); ++i) mus << (i ? " " : "") << mu[i];
        csv << mus.str() << "," << blk.basis.dim() << "," << cert.summands.size() << "\n";
    }
    if (format == "csv") {
        emit(csv.str(), out);
    } else {
        emit(Json{{"n", n},
                  {"r", r},
                  {"total_dim", total},
                  {"summand_count", summand_total},
                  {"blocks", blocks}}
                 .dump(2),
             out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted queer q-Schur superalgebra toolkit"};
    app.require_subcommand(1);

    int n = 2, r = 1, oracle_max_r = 4;
    size_t index = 0;
    unsigned seed = 2024;
    std::string mu_text, format = "json", out, word_text;
    bool include_derived = false;

    auto add_common = [&](CLI::App* sub, bool need_r = true) {
        sub->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
        auto* ro = sub->add_option("--r", r, "degree")->check(CLI::NonNegativeNumber);
        if (need_r) ro->required();
        sub->add_option("--format", format, "json|csv|text");
        sub->add_option("--out", out, "output path (default stdout)");
        sub->add_option("--seed", seed, "pseudorandom seed for certificates");
    };

    auto* basis = app.add_subcommand("basis", "list the matrix basis of M(n,r)");
    add_common(basis);
    auto* act = app.add_subcommand("act", "apply a generator word to a basis element");
    add_common(act);
    act->add_option("--index", index, "position of the basis element in canonical order");
    act->add_option("--word", word_text, "comma-separated generators, e.g. E1,Kbar2,F1")
        ->required();
    auto* verify = app.add_subcommand("verify", "run the relation and structure suites");
    add_common(verify);
    auto* oracle = app.add_subcommand("oracle-check", "compare the action formulas with the "
                                                      "Hecke-Clifford model");
    add_common(oracle);
    oracle->add_option("--oracle-max-r", oracle_max_r, "size guard (default 4)");
    oracle->add_flag("--include-derived-generators", include_derived,
                     "also check Ebar/Fbar/Kbar_j");
    auto* decompose = app.add_subcommand("decompose", "emit decomposition certificates");
    add_common(decompose);
    decompose->add_option("--mu", mu_text, "single block label, e.g. 1,1");
    decompose->add_flag("--include-derived-generators", include_derived,
                        "use the derived generators in closures too");
    auto* report = app.add_subcommand("report", "dimension tables");
    add_common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (basis->parsed()) return run_basis(n, r, format, out);
        if (act->parsed()) return run_act(n, r, index, word_text, out);
        if (verify->parsed()) return run_verify(n, r, seed, out);
        if (oracle->parsed()) return run_oracle_check(n, r, oracle_max_r, include_derived, out);
        if (decompose->parsed())
            return run_decompose(n, r, mu_text, seed, include_derived, out);
        if (report->parsed()) return run_report(n, r, seed, format, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
