/*
   Copyright 2026 The mosls Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a mathematical check failed,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include "mosls.hpp"

namespace mosls::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::string command;
    std::string in;
    std::string other;  ///< second input of `compare`
    std::string out;
    bool json = false;
    bool numeric_only = false;
    double tol = 1e-12;
    double group_tol = 1e-6;
    std::size_t exact_cap = 150;
    int order_cap = kDefaultOrderCap;

    // construct
    std::optional<int> p, m, n;
    std::vector<std::string> factors;
    std::optional<std::size_t> count;

    // spectrum / graph-export
    std::string subset;
    bool mols_only = false;
    bool verify_ev1 = false;
    std::string format = "edges";

    // switch / compare
    std::optional<int> row_block, col_block;
    std::string symbols;
    std::string rows;
    std::optional<int> cycle_symbol;
    std::optional<std::size_t> square;
    std::optional<std::size_t> other_square;

    // table
    int max_order = 12;
};

namespace detail {

inline std::vector<long long> parse_int_list(const std::string& text, char sep, const std::string& what) {
    std::vector<long long> out;
    std::stringstream in(text);
    for (std::string tok; std::getline(in, tok, sep);) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw DomainError("cannot parse " + what + " '" + text + "'");
        }
    }
    return out;
}

inline MoslsFamily load_family(const std::string& path) {
    if (path.empty()) throw DomainError("--in is required");
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open '" + path + "'");
    return read_family(f);
}

inline void save_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot write '" + path + "'");
    f << text;
}

inline std::vector<std::size_t> subset_of(const MoslsFamily& F, const std::string& spec) {
    if (spec.empty()) return full_subset(F);
    std::vector<std::size_t> out;
    for (long long k : parse_int_list(spec, ',', "subset")) {
        if (k < 1 || static_cast<std::size_t>(k) > F.size())
            throw DomainError("subset index " + std::to_string(k) + " outside [1, " + std::to_string(F.size()) + "]");
        out.push_back(static_cast<std::size_t>(k - 1));
    }
    return out;
}

inline const LatinSquare& pick_square(const MoslsFamily& F, std::optional<std::size_t> index) {
    if (F.empty()) throw DomainError("input family is empty");
    if (!index && F.size() != 1) throw DomainError("input holds " + std::to_string(F.size()) + " squares; choose one with --square");
    const std::size_t k = index.value_or(1);
    if (k < 1 || k > F.size()) throw DomainError("--square " + std::to_string(k) + " outside [1, " + std::to_string(F.size()) + "]");
    return F[k - 1];
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline std::vector<FieldConstructionSpec> construction_factors(const RunConfig& cfg) {
    std::vector<FieldConstructionSpec> out;
    if (!cfg.factors.empty()) {
        if (cfg.p || cfg.m || cfg.n) throw DomainError("use either --p/--m/--n or --factor, not both");
        for (const auto& f : cfg.factors) {
            const auto v = parse_int_list(f, ':', "factor (expected p:m:n)");
            if (v.size() != 3) throw DomainError("factor '" + f + "' is not of the form p:m:n");
            out.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])});
        }
        return out;
    }
    if (!cfg.p || !cfg.m || !cfg.n) throw DomainError("construct needs --p, --m and --n, or --factor p:m:n");
    out.push_back({*cfg.p, *cfg.m, *cfg.n});
    return out;
}

inline nlohmann::json report_json(const FamilyReport& rep) {
    nlohmann::json squares = nlohmann::json::array();
    for (std::size_t k = 0; k < rep.latin.size(); ++k)
        squares.push_back({{"latin", rep.latin[k]}, {"sudoku", rep.sudoku[k]}, {"block_permutational", rep.block_permutational[k]}});
    nlohmann::json orth = nlohmann::json::array();
    for (const auto& row : rep.orthogonal) orth.push_back(row);
    return {{"squares", squares}, {"orthogonal", orth}, {"pass", rep.all_pass()}};
}

}  // namespace detail

inline int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto factors = detail::construction_factors(cfg);
    MoslsFamily F = composite_family(factors, cfg.order_cap);
    if (cfg.count) {
        if (*cfg.count > F.size())
            throw DomainError("--count " + std::to_string(*cfg.count) + " exceeds the " + std::to_string(F.size()) +
                              " squares available");
        F = MoslsFamily(F.shape(), std::vector<LatinSquare>(F.squares().begin(), F.squares().begin() + static_cast<long>(*cfg.count)));
    }
    const FamilyReport rep = check_family(F);

    std::ostream& summary = cfg.out.empty() ? err : out;
    if (cfg.out.empty()) write_family(out, F);
    else detail::save_text(cfg.out, format_family(F));

    if (cfg.json) {
        auto j = detail::report_json(rep);
        j["order"] = F.order();
        j["type"] = {F.shape().q, F.shape().r};
        j["count"] = F.size();
        summary << j.dump(2) << '\n';
    } else {
        summary << "constructed " << F.size() << " square" << (F.size() == 1 ? "" : "s") << " of order " << F.order()
                << ", type " << to_string(F.shape()) << '\n';
        summary << "validation: " << (rep.all_pass() ? "PASS" : "FAIL")
                << " (Latin, Sudoku, block-permutational, pairwise orthogonal)\n";
    }
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const MoslsFamily F = detail::load_family(cfg.in);
    const FamilyReport rep = check_family(F);
    if (cfg.json) {
        out << detail::report_json(rep).dump(2) << '\n';
    } else {
        out << "order " << F.order() << ", type " << to_string(F.shape()) << ", " << F.size() << " square"
            << (F.size() == 1 ? "" : "s") << '\n';
        for (std::size_t k = 0; k < F.size(); ++k)
            out << "square " << k + 1 << ": latin " << detail::yes_no(rep.latin[k]) << ", sudoku "
                << detail::yes_no(rep.sudoku[k]) << ", block-permutational " << detail::yes_no(rep.block_permutational[k])
                << '\n';
        if (F.size() > 1) {
            out << "orthogonality:\n";
            for (std::size_t a = 0; a < F.size(); ++a) {
                out << "  ";
                for (std::size_t b = 0; b < F.size(); ++b) out << (b ? " " : "") << (a == b ? "-" : rep.orthogonal[a][b] ? "1" : "0");
                out << '\n';
            }
        }
        out << "result: " << (rep.all_pass() ? "PASS" : "FAIL") << '\n';
    }
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

enum class Ev1Verdict { Match, Mismatch, Inapplicable };

inline int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.verify_ev1 && cfg.mols_only) throw DomainError("--verify-ev1 applies to the MOSLS graph; drop --mols-only");
    const MoslsFamily F = detail::load_family(cfg.in);
    const auto subset = detail::subset_of(F, cfg.subset);
    const CellGraph G = cfg.mols_only ? build_mols_graph(F, subset) : build_mosls_graph(F, subset);

    SpectrumOptions opt;
    opt.jacobi_tol = cfg.tol;
    opt.group_tol = cfg.group_tol;
    opt.exact = !cfg.numeric_only;
    opt.exact_cap = cfg.exact_cap;
    const SpectrumReport rep = numeric_spectrum(G.adjacency, opt);
    for (const auto& w : rep.warnings) err << "warning: " << w << '\n';

    std::optional<Ev1Verdict> verdict;
    std::string reason;
    if (cfg.verify_ev1) {
        const auto f = static_cast<long long>(subset.size());
        bool sudoku = f > 0;
        for (auto k : subset) sudoku = sudoku && is_latin(F[k]) && is_sudoku(F[k]);
        if (!sudoku) {
            verdict = Ev1Verdict::Inapplicable;
            reason = "squares are not all Sudoku Latin squares";
        } else if (!commute_check(F, subset)) {
            verdict = Ev1Verdict::Inapplicable;
            reason = "commutation fails";
        } else {
            try {
                const ClosedSpectrum closed = ev1_spectrum(F.shape().q, F.shape().r, f);
                if (rep.charpoly) {
                    verdict = closed_to_poly(closed) == *rep.charpoly ? Ev1Verdict::Match : Ev1Verdict::Mismatch;
                } else {
                    bool same = closed.entries().size() == rep.numeric.size();
                    for (std::size_t k = 0; same && k < rep.numeric.size(); ++k)
                        same = std::fabs(static_cast<double>(closed.entries()[k].value.value()) - rep.numeric[k].value) < cfg.group_tol &&
                               closed.entries()[k].multiplicity == rep.numeric[k].multiplicity;
                    verdict = same ? Ev1Verdict::Match : Ev1Verdict::Mismatch;
                    reason = "numeric comparison";
                }
            } catch (const DomainError& e) {
                verdict = Ev1Verdict::Inapplicable;
                reason = e.what();
            }
        }
    }
    const char* names[] = {"MATCH", "MISMATCH", "INAPPLICABLE"};

    if (cfg.json) {
        auto j = to_json(rep);
        if (verdict) {
            j["ev1"] = names[static_cast<int>(*verdict)];
            if (!reason.empty()) j["ev1_reason"] = reason;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "graph: " << (cfg.mols_only ? "MOLS" : "MOSLS") << ", order " << F.order() << ", type "
            << to_string(F.shape()) << ", f = " << subset.size() << ", " << G.vertex_count() << " vertices\n";
        out << "spectrum: " << format_numeric(rep.numeric) << '\n';
        if (rep.charpoly) {
            out << "charpoly: " << rep.charpoly->to_string() << '\n';
            out << "residual: " << *rep.residual << '\n';
        }
        if (verdict) {
            out << "ev1: " << names[static_cast<int>(*verdict)];
            if (!reason.empty()) out << " (" << reason << ")";
            out << '\n';
        }
    }
    return verdict == Ev1Verdict::Mismatch ? kExitCheckFailed : kExitOk;
}

inline int cmd_graph_export(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const MoslsFamily F = detail::load_family(cfg.in);
    const auto subset = detail::subset_of(F, cfg.subset);
    const CellGraph G = cfg.mols_only ? build_mols_graph(F, subset) : build_mosls_graph(F, subset);
    std::ostringstream text;
    if (cfg.format == "edges") write_edge_list(text, G);
    else if (cfg.format == "matrix") write_dense_matrix(text, G);
    else throw DomainError("--format must be 'edges' or 'matrix'");
    if (cfg.out.empty()) out << text.str();
    else detail::save_text(cfg.out, text.str());
    return kExitOk;
}

inline int cmd_switch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const MoslsFamily F = detail::load_family(cfg.in);
    const LatinSquare& L = detail::pick_square(F, cfg.square);

    const bool symbol_switch = cfg.row_block || cfg.col_block;
    const bool cycle_switch = !cfg.rows.empty();
    if (symbol_switch == cycle_switch)
        throw DomainError("choose one switch: --row-block/--col-block with --symbols, or --rows with --cycle-symbol");

    LatinSquare switched;
    std::optional<SwitchSpec> spec;
    if (symbol_switch) {
        if (cfg.row_block && cfg.col_block) throw DomainError("--row-block and --col-block are exclusive");
        const auto ks = detail::parse_int_list(cfg.symbols, ',', "--symbols");
        if (ks.size() != 2) throw DomainError("--symbols expects K1,K2");
        spec = SwitchSpec{cfg.row_block ? LineBlockKind::RowBlock : LineBlockKind::ColumnBlock,
                          (cfg.row_block ? *cfg.row_block : *cfg.col_block) - 1, static_cast<int>(ks[0]),
                          static_cast<int>(ks[1])};
        switched = sudoku_symbol_switch(L, *spec);
    } else {
        const auto rs = detail::parse_int_list(cfg.rows, ',', "--rows");
        if (rs.size() != 2) throw DomainError("--rows expects R,S");
        if (!cfg.cycle_symbol) throw DomainError("--rows needs --cycle-symbol K");
        const RowCycle c = find_row_cycle(L, static_cast<int>(rs[0]) - 1, static_cast<int>(rs[1]) - 1, *cfg.cycle_symbol);
        switched = row_cycle_switch(L, c);
    }

    const MoslsFamily result(switched.shape(), {switched});
    std::ostream& report = cfg.out.empty() ? err : out;
    if (cfg.out.empty()) write_family(out, result);
    else detail::save_text(cfg.out, format_family(result));

    const bool sudoku = is_sudoku(switched);
    const NonisomorphismCertificate cert = nonisomorphism_certificate(L, switched);
    std::optional<SwitchTheoremCheck> theorem;
    if (spec) theorem = switching_theorem_check(L, *spec);
    const bool failed = theorem && theorem->applicable && !theorem->match;
    const std::string theorem_text =
        !theorem ? "not applicable to row cycle switching"
                 : theorem->applicable ? (theorem->match ? "PASS" : "FAIL") : "INAPPLICABLE (" + theorem->reason + ")";

    if (cfg.json) {
        nlohmann::json j{{"latin", is_latin(switched)}, {"sudoku", sudoku}, {"certificate", to_json(cert)}, {"theorem", theorem_text}};
        report << j.dump(2) << '\n';
    } else {
        report << "switched square: latin " << detail::yes_no(is_latin(switched)) << ", sudoku " << detail::yes_no(sudoku) << '\n';
        report << "certificate: " << to_string(cert.verdict);
        if (cert.differing_coefficient_index) report << " (coefficients of t^" << *cert.differing_coefficient_index << " differ)";
        report << '\n';
        report << "theorem check: " << theorem_text << '\n';
    }
    return failed ? kExitCheckFailed : kExitOk;
}

inline int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const MoslsFamily A = detail::load_family(cfg.in);
    const MoslsFamily B = detail::load_family(cfg.other);
    const auto cert = nonisomorphism_certificate(detail::pick_square(A, cfg.square), detail::pick_square(B, cfg.other_square));
    if (cfg.json) {
        out << to_json(cert).dump(2) << '\n';
    } else {
        out << "verdict: " << to_string(cert.verdict) << '\n';
        if (cert.differing_coefficient_index) out << "first differing coefficient: t^" << *cert.differing_coefficient_index << '\n';
        out << "charpoly a: " << cert.charpoly_a.to_string() << '\n';
        out << "charpoly b: " << cert.charpoly_b.to_string() << '\n';
    }
    return kExitOk;
}

inline int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (cfg.max_order > cfg.order_cap)
        throw DomainError("--max-order " + std::to_string(cfg.max_order) + " exceeds the order cap " + std::to_string(cfg.order_cap));
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : lower_bound_table()) {
        if (row.order > cfg.max_order) continue;
        const TableResult res = verify_table_row(row, cfg.order_cap);
        ok = ok && res.status != TableStatus::Failed;
        const std::string listed = (row.at_least ? ">=" : "") + std::to_string(row.listed);
        if (cfg.json) {
            rows.push_back({{"order", row.order},
                            {"type", {row.shape.q, row.shape.r}},
                            {"listed", listed},
                            {"built", res.built},
                            {"status", to_string(res.status)}});
        } else {
            out << "order " << row.order << " type " << to_string(row.shape) << " f " << listed;
            if (!row.external) out << " built " << res.built;
            out << " " << to_string(res.status);
            if (res.status == TableStatus::Failed) out << " (" << res.detail << ")";
            out << '\n';
        }
    }
    if (cfg.json) out << nlohmann::json{{"rows", rows}, {"pass", ok}}.dump(2) << '\n';
    return ok ? kExitOk : kExitCheckFailed;
}

/// Parses arguments (argv[0] is the program name) and runs one command.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    RunConfig cfg;
    CLI::App app{"Mutually orthogonal Sudoku Latin squares: construction, graphs and spectra", "mosls"};
    app.require_subcommand(1);

    auto shared = [&cfg](CLI::App* sub) {
        sub->add_option("--in", cfg.in, "input file in mosls v1 format");
        sub->add_option("--out", cfg.out, "output file");
        sub->add_flag("--json", cfg.json, "machine-readable output");
        sub->add_flag("--numeric", cfg.numeric_only, "skip the exact characteristic polynomial");
        sub->add_flag("--exact,!--no-exact", [&cfg](std::int64_t v) { cfg.numeric_only = v < 0; },
                      "compute the exact characteristic polynomial (default)");
        sub->add_option("--tol", cfg.tol, "Jacobi stopping tolerance");
        sub->add_option("--group-tol", cfg.group_tol, "eigenvalue grouping tolerance");
        sub->add_option("--exact-cap", cfg.exact_cap, "largest matrix dimension for exact polynomials");
        sub->add_option("--order-cap", cfg.order_cap, "largest order accepted by constructions");
    };

    auto* construct = app.add_subcommand("construct", "build a MOSLS family");
    shared(construct);
    construct->add_option("--p", cfg.p, "prime");
    construct->add_option("--m", cfg.m, "type exponent: q = p^m");
    construct->add_option("--n", cfg.n, "type exponent: r = p^n");
    construct->add_option("--factor", cfg.factors, "p:m:n for one prime of a composite order (repeatable)");
    construct->add_option("--count", cfg.count, "keep only the first K squares");

    auto* check = app.add_subcommand("check", "validate a family file");
    shared(check);

    auto* spectrum = app.add_subcommand("spectrum", "spectrum of the MOSLS (or MOLS) graph");
    shared(spectrum);
    spectrum->add_option("--subset", cfg.subset, "1-based square indices, e.g. 1,2 (default: all)");
    spectrum->add_flag("--mols-only", cfg.mols_only, "omit the block edges");
    spectrum->add_flag("--verify-ev1", cfg.verify_ev1, "compare with the closed-form spectrum for commuting families");

    auto* gexport = app.add_subcommand("graph-export", "write the graph as an edge list or dense matrix");
    shared(gexport);
    gexport->add_option("--subset", cfg.subset, "1-based square indices (default: all)");
    gexport->add_flag("--mols-only", cfg.mols_only, "omit the block edges");
    gexport->add_option("--format", cfg.format, "edges | matrix");

    auto* sw = app.add_subcommand("switch", "switch a Sudoku Latin square and certify the change");
    shared(sw);
    sw->add_option("--row-block", cfg.row_block, "1-based row-block index");
    sw->add_option("--col-block", cfg.col_block, "1-based column-block index");
    sw->add_option("--symbols", cfg.symbols, "K1,K2");
    sw->add_option("--rows", cfg.rows, "R,S for a row cycle switch (1-based)");
    sw->add_option("--cycle-symbol", cfg.cycle_symbol, "symbol of row R on the cycle to switch");
    sw->add_option("--square", cfg.square, "1-based square index in the input family");

    auto* compare = app.add_subcommand("compare", "spectral non-isomorphism certificate for two squares");
    shared(compare);
    compare->add_option("--against", cfg.other, "second input file");
    compare->add_option("--square", cfg.square, "1-based square index in --in");
    compare->add_option("--against-square", cfg.other_square, "1-based square index in --against");

    auto* table = app.add_subcommand("table", "rebuild and verify the constructive lower-bound table");
    shared(table);
    table->add_option("--max-order", cfg.max_order, "largest order to include");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(cfg, out, err);
        if (check->parsed()) return cmd_check(cfg, out, err);
        if (spectrum->parsed()) return cmd_spectrum(cfg, out, err);
        if (gexport->parsed()) return cmd_graph_export(cfg, out, err);
        if (sw->parsed()) return cmd_switch(cfg, out, err);
        if (compare->parsed()) return cmd_compare(cfg, out, err);
        if (table->parsed()) return cmd_table(cfg, out, err);
    } catch (const ParseError& e) {
        err << "error: " << cfg.in << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const VerificationError& e) {
        err << "check failed: " << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"mosls"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mosls::cli
