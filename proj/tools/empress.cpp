// Command-line front end: solve (retrograde oracle), formula (closed forms),
// morphic (substitution words), verify (cross-checks), scan (Queen Bee
// residuals). Output is byte-deterministic; exit codes: 0 success / all
// checks pass, 1 verification failure, 2 usage error, 3 resource error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "empress/empress.hpp"

namespace {

using namespace empress;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::int64_t parse_int(const std::string& s) {
    if (s.empty()) throw ParameterError("expected an integer, got ''");
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ParameterError("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw ParameterError("expected an integer, got '" + s + "'");
    return value;
}

std::vector<std::int64_t> parse_params(const std::string& s) {
    std::vector<std::int64_t> out;
    for (const std::string& part : split(s, ',')) out.push_back(parse_int(part));
    return out;
}

// Grammar: name[:p1,p2]. Accepted names: standard, k-queen:K, queen-bee,
// queen-dee, N-queen-dee, k-queen-dee:K, widened:J,M, restricted:K,J.
QueenVariant parse_variant(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::vector<std::int64_t> params =
        colon == std::string::npos ? std::vector<std::int64_t>{} : parse_params(spec.substr(colon + 1));
    const auto want = [&](std::size_t n) {
        if (params.size() != n)
            throw ParameterError("variant '" + head + "' takes " + std::to_string(n) +
                                 " parameter(s)");
    };

    if (head == "standard") { want(0); return QueenVariant::standard(); }
    if (head == "queen-bee") { want(0); return QueenVariant::queen_bee(); }
    if (head == "queen-dee") { want(0); return QueenVariant::k_queen_dee(1); }
    if (head == "k-queen") { want(1); return QueenVariant::k_queen(params[0]); }
    if (head == "k-queen-dee") { want(1); return QueenVariant::k_queen_dee(params[0]); }
    if (head == "widened") { want(2); return QueenVariant::widened(params[0], params[1]); }
    if (head == "restricted") { want(2); return QueenVariant::restricted_stroll(params[0], params[1]); }

    const std::string dee_suffix = "-queen-dee";
    if (head.size() > dee_suffix.size() &&
        head.compare(head.size() - dee_suffix.size(), dee_suffix.size(), dee_suffix) == 0) {
        want(0);
        return QueenVariant::k_queen_dee(parse_int(head.substr(0, head.size() - dee_suffix.size())));
    }
    throw ParameterError("unknown queen variant '" + spec + "'");
}

PPositionTable formula_table(const std::string& spec, std::size_t count) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::vector<std::int64_t> params =
        colon == std::string::npos ? std::vector<std::int64_t>{} : parse_params(spec.substr(colon + 1));
    const auto want = [&](std::size_t n) {
        if (params.size() != n)
            throw ParameterError("formula '" + head + "' takes " + std::to_string(n) +
                                 " parameter(s)");
    };

    if (head == "queen-bee") { want(0); return queen_bee_pairs(count); }
    if (head == "2-queen-dee") { want(0); return two_queen_dee_pairs(count); }
    if (head == "queen-dee") { want(0); return queen_dee_pairs(count); }
    if (head == "holladay") { want(1); return holladay_pairs(params[0], count); }
    if (head == "fraenkel") { want(2); return fraenkel_pairs(params[0], params[1], count); }
    if (head == "restricted") { want(2); return restricted_pairs(params[0], params[1], count); }
    throw ParameterError("unknown formula '" + spec + "'");
}

struct MorphicSpec {
    Morphism morphism;
    std::string erase;
};

// name[:params][-erase-LETTERS], e.g. tribonacci-erase-b or fraenkel:1,3.
MorphicSpec parse_morphic(const std::string& spec) {
    std::string base = spec;
    std::string erase;
    const std::string marker = "-erase-";
    if (const auto at = spec.find(marker); at != std::string::npos) {
        base = spec.substr(0, at);
        erase = spec.substr(at + marker.size());
        if (erase.empty()) throw ParameterError("empty erase letters in '" + spec + "'");
    }
    const auto colon = base.find(':');
    const std::string name = base.substr(0, colon);
    const std::vector<std::int64_t> params =
        colon == std::string::npos ? std::vector<std::int64_t>{} : parse_params(base.substr(colon + 1));
    return {catalog(name, params), erase};
}

// Extraction letters for a morphic table source: the two alphabet letters
// that survive erasing, in alphabet order.
std::pair<char, char> surviving_letters(const MorphicSpec& ms) {
    std::string left;
    for (char c : ms.morphism.alphabet)
        if (ms.erase.find(c) == std::string::npos) left.push_back(c);
    if (left.size() != 2)
        throw ParameterError("morphic table needs exactly two letters after erasing, got '" +
                             left + "'");
    return {left[0], left[1]};
}

PPositionTable table_from_source(const std::string& source, std::size_t count, bool fast,
                                 const SolverLimits& limits) {
    const auto colon = source.find(':');
    if (colon == std::string::npos)
        throw ParameterError("table source must be solve:..., formula:..., or morphic:...");
    const std::string kind = source.substr(0, colon);
    const std::string rest = source.substr(colon + 1);
    if (kind == "solve") return p_positions(parse_variant(rest), count, fast, limits);
    if (kind == "formula") return formula_table(rest, count);
    if (kind == "morphic") {
        const MorphicSpec ms = parse_morphic(rest);
        const auto [la, lb] = surviving_letters(ms);
        return morphic_table(ms.morphism, ms.erase, la, lb, count);
    }
    throw ParameterError("unknown table source kind '" + kind + "'");
}

void emit(const std::string& bytes, const std::string& emit_path, std::ostream& fallback) {
    if (emit_path.empty()) {
        fallback << bytes;
        return;
    }
    std::ofstream out(emit_path, std::ios::binary);
    if (!out) throw CapacityError("cannot open '" + emit_path + "' for writing");
    out << bytes;
}

struct CommonTableArgs {
    std::size_t count = 15;
    std::string format = "csv";
    std::string emit_path;
};

void add_table_args(CLI::App* cmd, CommonTableArgs& args) {
    cmd->add_option("--count", args.count, "number of P-position rows")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--format", args.format, "output format: csv, json, or tsv")
        ->check(CLI::IsMember({"csv", "json", "tsv"}))
        ->capture_default_str();
    cmd->add_option("--emit", args.emit_path, "write the table as CSV to this path");
}

void print_table(const PPositionTable& table, const CommonTableArgs& args) {
    if (!args.emit_path.empty())
        emit(format_table(table, OutputFormat::Csv), args.emit_path, std::cout);
    else
        std::cout << format_table(table, parse_format(args.format));
}

int run(int argc, char** argv) {
    CLI::App app{"P-positions of Wythoff-type queen games by exact retrograde "
                 "search, closed forms, and morphic words"};
    app.require_subcommand(1);

    SolverLimits limits;

    // solve
    auto* solve = app.add_subcommand("solve", "P-positions by exact retrograde search");
    std::string solve_queen;
    bool solve_fast = false;
    CommonTableArgs solve_args;
    solve->add_option("--queen", solve_queen,
                      "variant: standard | k-queen:K | queen-bee | queen-dee | 2-queen-dee | "
                      "widened:J,M | restricted:K,J")
        ->required();
    solve->add_flag("--fast", solve_fast, "use line-indexed scanning (identical output)");
    solve->add_option("--max-level", limits.max_level, "Manhattan level budget")
        ->capture_default_str();
    add_table_args(solve, solve_args);
    solve->callback([&] {
        print_table(p_positions(parse_variant(solve_queen), solve_args.count, solve_fast, limits),
                    solve_args);
    });

    // formula
    auto* formula = app.add_subcommand("formula", "P-positions by closed form");
    std::string formula_name;
    CommonTableArgs formula_args;
    formula->add_option("--name", formula_name,
                        "queen-bee | 2-queen-dee | queen-dee | holladay:K | fraenkel:K,J | "
                        "restricted:K,J")
        ->required();
    add_table_args(formula, formula_args);
    formula->callback([&] { print_table(formula_table(formula_name, formula_args.count), formula_args); });

    // morphic
    auto* morphic = app.add_subcommand("morphic", "fixed-point words and their tables");
    std::string morphic_name, morphic_erase, morphic_letters;
    std::size_t morphic_prefix = 0, morphic_count = 15;
    std::string morphic_format = "csv", morphic_emit;
    morphic->add_option("--name", morphic_name,
                        "tribonacci | fibonacci | period-doubling | two-one | fourbonacci | "
                        "holladay:K | fraenkel:K,J | restricted:K,J")
        ->required();
    morphic->add_option("--prefix", morphic_prefix, "emit this many letters of the (erased) word")
        ->check(CLI::PositiveNumber);
    morphic->add_option("--erase", morphic_erase, "letters to delete from the fixed point");
    morphic->add_option("--table", morphic_letters,
                        "two letters la,lb; emit pairs of their occurrence indices");
    morphic->add_option("--count", morphic_count, "rows for --table")->check(CLI::PositiveNumber)
        ->capture_default_str();
    morphic->add_option("--format", morphic_format, "table format: csv, json, or tsv")
        ->check(CLI::IsMember({"csv", "json", "tsv"}))
        ->capture_default_str();
    morphic->add_option("--emit", morphic_emit, "write the table as CSV to this path");
    morphic->callback([&] {
        const MorphicSpec ms = parse_morphic(morphic_name + (morphic_erase.empty() ? "" : "-erase-" + morphic_erase));
        if (!morphic_letters.empty()) {
            const auto parts = split(morphic_letters, ',');
            if (parts.size() != 2 || parts[0].size() != 1 || parts[1].size() != 1)
                throw ParameterError("--table expects two letters, e.g. a,c");
            const PPositionTable t =
                morphic_table(ms.morphism, ms.erase, parts[0][0], parts[1][0], morphic_count);
            CommonTableArgs args{morphic_count, morphic_format, morphic_emit};
            print_table(t, args);
            return;
        }
        if (morphic_prefix == 0)
            throw ParameterError("morphic needs --prefix (word output) or --table (pairs)");
        std::size_t raw = morphic_prefix;
        std::string word;
        for (;;) {
            word = fixed_point(ms.morphism, ms.morphism.alphabet.front(), raw);
            if (!ms.erase.empty()) word = erase_letters(word, ms.erase);
            if (word.size() >= morphic_prefix) break;
            raw *= 2;
        }
        word.resize(morphic_prefix);
        std::cout << word << "\n";
    });

    // verify
    auto* verify = app.add_subcommand("verify", "cross-check tables and identities");
    std::string check_name, left_src, right_src, target_src, relation_name;
    std::size_t verify_count = 15;
    std::int64_t rel_k = 1, rel_j = 0;
    bool verify_failed = false;
    verify->add_option("--check", check_name,
                       "equiv | eq1 | lemma3 | good-triples | relation | complementary")
        ->required()
        ->check(CLI::IsMember({"equiv", "eq1", "lemma3", "good-triples", "relation",
                               "complementary"}));
    verify->add_option("--left", left_src, "equiv: left table source (solve:/formula:/morphic:)");
    verify->add_option("--right", right_src, "equiv: right table source");
    verify->add_option("--target", target_src,
                       "eq1: queen-dee | 2-queen-dee | queen-bee | 2-1-queen; "
                       "relation/complementary: a table source");
    verify->add_option("--count", verify_count, "prefix length to check")->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--relation", relation_name, "b=2a | b=a+kn | b=2a+n | b=a+kn-j");
    verify->add_option("--k", rel_k, "relation parameter k");
    verify->add_option("--j", rel_j, "relation parameter j");
    verify->add_option("--max-level", limits.max_level, "Manhattan level budget for solve: sources");
    verify->callback([&] {
        const auto table_of = [&](const std::string& src) {
            return table_from_source(src, verify_count, /*fast=*/true, limits);
        };
        if (check_name == "equiv") {
            if (left_src.empty() || right_src.empty())
                throw ParameterError("equiv needs --left and --right");
            const PPositionTable lt = table_of(left_src), rt = table_of(right_src);
            const auto mismatch = check_equivalence(lt, rt, verify_count);
            if (!mismatch) {
                std::cout << "PASS equiv left=" << left_src << " right=" << right_src
                          << " count=" << verify_count << "\n";
            } else {
                verify_failed = true;
                const std::size_t n = *mismatch;
                std::cout << "FAIL equiv left=" << left_src << " right=" << right_src
                          << " count=" << verify_count << ": first mismatch at n=" << n
                          << " left=(" << lt.a(n) << "," << lt.b(n) << ") right=(" << rt.a(n)
                          << "," << rt.b(n) << ")\n";
            }
        } else if (check_name == "eq1") {
            Eq1Target target;
            bool report_only = false;
            if (target_src == "queen-dee") target = Eq1Target::QueenDee;
            else if (target_src == "2-queen-dee") target = Eq1Target::TwoQueenDee;
            else if (target_src == "queen-bee") target = Eq1Target::QueenBee;
            else if (target_src == "2-1-queen" || target_src == "two-one") {
                target = Eq1Target::TwoOneQueen;
                report_only = true;
            } else
                throw ParameterError("eq1 target must be queen-dee, 2-queen-dee, queen-bee, "
                                     "or 2-1-queen");
            const Eq1Report report = eq1_report(target, verify_count);
            if (report_only) {
                std::cout << "REPORT eq1 target=" << target_src << " count=" << verify_count
                          << " max|r|=" << report.max_abs
                          << " violations=" << report.violations.size() << " (not asserted)\n";
            } else if (report.holds()) {
                std::cout << "PASS eq1 target=" << target_src << " count=" << verify_count
                          << " residuals in {0,-1}\n";
            } else {
                verify_failed = true;
                const Residual first = report.violations.front();
                std::cout << "FAIL eq1 target=" << target_src << " count=" << verify_count
                          << ": first violation at n=" << first.n << " r=" << first.r
                          << " (violations=" << report.violations.size()
                          << " max|r|=" << report.max_abs << ")\n";
            }
        } else if (check_name == "lemma3") {
            if (check_lemma3(verify_count)) {
                std::cout << "PASS lemma3 count=" << verify_count << "\n";
            } else {
                verify_failed = true;
                std::cout << "FAIL lemma3 count=" << verify_count << "\n";
            }
        } else if (check_name == "good-triples") {
            if (check_good_triples(verify_count)) {
                std::cout << "PASS good-triples count=" << verify_count << "\n";
            } else {
                verify_failed = true;
                std::cout << "FAIL good-triples count=" << verify_count << "\n";
            }
        } else if (check_name == "relation") {
            if (target_src.empty() || relation_name.empty())
                throw ParameterError("relation needs --target and --relation");
            Relation rel;
            if (relation_name == "b=2a") rel = Relation::TwiceA;
            else if (relation_name == "b=a+kn") rel = Relation::APlusKN;
            else if (relation_name == "b=2a+n") rel = Relation::TwiceAPlusN;
            else if (relation_name == "b=a+kn-j") rel = Relation::APlusKNMinusJ;
            else throw ParameterError("unknown relation '" + relation_name + "'");
            if (check_relation(table_of(target_src), rel, rel_k, rel_j, verify_count)) {
                std::cout << "PASS relation " << relation_name << " target=" << target_src
                          << " count=" << verify_count << "\n";
            } else {
                verify_failed = true;
                std::cout << "FAIL relation " << relation_name << " target=" << target_src
                          << " count=" << verify_count << "\n";
            }
        } else if (check_name == "complementary") {
            if (target_src.empty()) throw ParameterError("complementary needs --target");
            if (check_complementary(table_of(target_src), verify_count)) {
                std::cout << "PASS complementary target=" << target_src
                          << " count=" << verify_count << "\n";
            } else {
                verify_failed = true;
                std::cout << "FAIL complementary target=" << target_src
                          << " count=" << verify_count << "\n";
            }
        }
    });

    // scan
    auto* scan = app.add_subcommand("scan", "Queen Bee residual scan (closed form)");
    std::size_t scan_max_n = 0;
    std::string scan_emit;
    scan->add_option("--max-n", scan_max_n, "scan residuals for n = 1..max-n")
        ->required()
        ->check(CLI::PositiveNumber);
    scan->add_option("--emit", scan_emit, "write the n,r rows to this path");
    scan->callback([&] {
        const ResidualScan result = scan_queen_bee_residuals(scan_max_n);
        std::ostringstream rows;
        write_residual_csv(rows, result.residuals);
        std::ostringstream summary;
        for (const auto& [value, n] : result.first)
            summary << "first r=" << value << " at n=" << n << "\n";
        if (scan_emit.empty()) {
            std::cout << rows.str();
            std::cerr << summary.str();
        } else {
            emit(rows.str(), scan_emit, std::cout);
            std::cout << summary.str();
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return verify_failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const empress::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const empress::CapacityError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
