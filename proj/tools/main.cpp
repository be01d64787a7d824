// Command-line front end: counting, merging enumeration, bijection mapping,
// Galois connection enumeration, built-in cross-check tables, DOT output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "posetmerge/coloring.hpp"
#include "posetmerge/counting.hpp"
#include "posetmerge/galois.hpp"
#include "posetmerge/generalized.hpp"
#include "posetmerge/io.hpp"
#include "posetmerge/merging.hpp"
#include "posetmerge/plane_partition.hpp"

namespace {

using namespace posetmerge;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

Limits limits_from_env() {
    Limits l;
    if (const char* v = std::getenv("POSETMERGE_MAX_PAIRS")) l.max_bond_pairs = std::stoull(v);
    if (const char* v = std::getenv("POSETMERGE_MAX_CONCEPTS")) l.max_concepts = std::stoull(v);
    return l;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json_input(const std::string& path) {
    try {
        return json::parse(read_input(path));
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

// "chain:<n>" | "antichain:<m>" | "boolean:<m>" | "@<poset json file>"
QuasiOrder parse_poset_spec(const std::string& spec, const std::string& prefix) {
    auto numeric_tail = [&](const std::string& head) -> std::optional<std::size_t> {
        if (spec.rfind(head, 0) != 0) return std::nullopt;
        const std::string tail = spec.substr(head.size());
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed poset spec '" + spec + "'");
        return std::stoul(tail);
    };
    if (auto n = numeric_tail("chain:")) return make_chain(*n, prefix);
    if (auto m = numeric_tail("antichain:")) return make_antichain(*m, prefix);
    if (auto m = numeric_tail("boolean:")) return boolean_lattice(*m, prefix);
    if (!spec.empty() && spec[0] == '@') return quasi_order_from_json(parse_json_input(spec.substr(1)));
    throw ParseError("poset spec must be chain:<n>, antichain:<m>, boolean:<m> or @<file>, got '" +
                     spec + "'");
}

// ---- count ----

int cmd_count(const std::string& family, std::size_t m, std::size_t n, int l) {
    BigCount value;
    if (family == "chains") value = count_chain_mergings(m, n);
    else if (family == "antichains") value = count_antichain_mergings(m, n);
    else if (family == "antichain-chain") value = count_antichain_chain(m, n);
    else if (family == "pp") value = macmahon(m, n, l);
    else if (family == "galois-chains") value = count_galois_chains(m, n);
    else if (family == "galois-boolean") value = count_galois_boolean_chain(m, n);
    else
        throw ParseError("unknown count family '" + family +
                         "' (expected chains, antichains, antichain-chain, pp, galois-chains or "
                         "galois-boolean)");
    std::cout << value << "\n";
    return kExitOk;
}

// ---- enumerate ----

int cmd_enumerate(const std::string& pspec, const std::string& qspec, bool proper,
                  const std::string& format) {
    const QuasiOrder p = parse_poset_spec(pspec, "a");
    const QuasiOrder q = parse_poset_spec(qspec, "b");
    const auto mergings = enumerate_mergings(p, q, proper, limits_from_env());
    if (format == "count") {
        std::cout << mergings.size() << "\n";
    } else if (format == "json") {
        for (const auto& m : mergings) std::cout << merging_to_json(m).dump() << "\n";
    } else if (format == "dot") {
        for (std::size_t i = 0; i < mergings.size(); ++i)
            std::cout << merged_order_dot(mergings[i], "m" + std::to_string(i));
    } else {
        throw ParseError("enumerate supports --format json, count or dot");
    }
    return kExitOk;
}

// ---- map ----

int cmd_map(const std::string& direction, const std::string& input) {
    if (direction == "pp-to-merging") {
        const PlanePartition pp = pp_from_json(parse_json_input(input));
        std::cout << merging_to_json(pp_to_merging(pp)).dump() << "\n";
    } else if (direction == "merging-to-pp") {
        const Merging m = merging_from_json(parse_json_input(input));
        std::cout << pp_to_json(merging_to_pp(m)).dump() << "\n";
    } else if (direction == "coloring-to-merging") {
        const MonotoneColoring g = coloring_from_json(parse_json_input(input));
        std::cout << merging_to_json(coloring_to_merging(g)).dump() << "\n";
    } else if (direction == "merging-to-coloring") {
        const Merging m = merging_from_json(parse_json_input(input));
        std::cout << coloring_to_json(merging_to_coloring(m)).dump() << "\n";
    } else {
        throw ParseError("unknown map direction '" + direction +
                         "' (expected pp-to-merging, merging-to-pp, coloring-to-merging or "
                         "merging-to-coloring)");
    }
    return kExitOk;
}

// ---- galois enumerate ----

struct SpecKind {
    enum Kind { chain, antichain, boolean_lattice_kind, file } kind;
    std::size_t size = 0;
};

SpecKind spec_kind(const std::string& spec) {
    if (spec.rfind("chain:", 0) == 0) return {SpecKind::chain, std::stoul(spec.substr(6))};
    if (spec.rfind("antichain:", 0) == 0) return {SpecKind::antichain, std::stoul(spec.substr(10))};
    if (spec.rfind("boolean:", 0) == 0)
        return {SpecKind::boolean_lattice_kind, std::stoul(spec.substr(8))};
    return {SpecKind::file, 0};
}

int cmd_galois(const std::string& left, const std::string& right, const std::string& format) {
    const SpecKind lk = spec_kind(left);
    const SpecKind rk = spec_kind(right);
    std::vector<GaloisConnection> gs;
    if (lk.kind == SpecKind::chain && rk.kind == SpecKind::chain) {
        gs = enumerate_galois_chains(lk.size, rk.size);
    } else if (lk.kind == SpecKind::boolean_lattice_kind && rk.kind == SpecKind::chain) {
        if (rk.size < 1) throw DomainError("the chain side needs at least one element");
        gs = enumerate_galois_boolean_chain(lk.size, rk.size - 1);
    } else {
        throw DomainError(
            "galois enumerate supports --left chain:<m> --right chain:<n> or --left boolean:<m> "
            "--right chain:<k>");
    }
    if (format == "count") {
        std::cout << gs.size() << "\n";
    } else if (format == "json") {
        for (const auto& g : gs) std::cout << galois_to_json(g).dump() << "\n";
    } else if (format == "table") {
        for (std::size_t i = 0; i < gs.size(); ++i)
            std::cout << "# " << (i + 1) << "  " << galois_to_table_row(gs[i]) << "\n";
    } else {
        throw ParseError("galois enumerate supports --format table, json or count");
    }
    return kExitOk;
}

// ---- verify appendix ----

struct VerifyFailure : Error {
    using Error::Error;
};

void check(bool ok, const std::string& what) {
    if (!ok) throw VerifyFailure(what);
}

void verify_table_a() {
    const auto pps = enumerate_plane_partitions(2, 2, 2);
    check(pps.size() == 20, "expected 20 rows, found " + std::to_string(pps.size()));
    std::set<std::pair<std::vector<std::pair<std::size_t, std::size_t>>,
                       std::vector<std::pair<std::size_t, std::size_t>>>>
        seen;
    for (std::size_t i = 0; i < pps.size(); ++i) {
        const Merging m = pp_to_merging(pps[i]);
        check(m.is_proper_merging(), "row " + std::to_string(i + 1) + ": not a proper merging");
        check(merging_to_pp(m) == pps[i], "row " + std::to_string(i + 1) + ": roundtrip mismatch");
        check(seen.insert({m.r.pairs(), m.s.pairs()}).second,
              "row " + std::to_string(i + 1) + ": duplicate merging");
    }
    std::cout << "table A: 20 rows, all distinct proper mergings, roundtrip identity ok\n";
}

void verify_table_b() {
    const GeneralizedFamily fam = enumerate_generalized({1, 1, 1});
    check(fam.arrangement_count == 27,
          "expected 27 arrangements, found " + std::to_string(fam.arrangement_count));
    check(fam.proper_count == 25,
          "expected 25 proper arrangements, found " + std::to_string(fam.proper_count));
    check(fam.size() == 19, "expected 19 distinct mergings, found " + std::to_string(fam.size()));
    std::vector<std::size_t> fiber_sizes(fam.size(), 0);
    for (const auto& f : fam.fibers)
        if (f) fiber_sizes[*f]++;
    std::size_t doubled = 0, single = 0;
    for (std::size_t i = 0; i < fiber_sizes.size(); ++i) {
        if (fiber_sizes[i] == 2) ++doubled;
        else if (fiber_sizes[i] == 1) ++single;
        else
            throw VerifyFailure("merging " + std::to_string(i) + " has fiber size " +
                                std::to_string(fiber_sizes[i]));
    }
    check(doubled == 6, "expected 6 doubled fibers, found " + std::to_string(doubled));
    check(single == 13, "expected 13 single fibers, found " + std::to_string(single));
    for (std::size_t i = 0; i < fam.size(); ++i) {
        check(fam.mergings[i].antisymmetric(),
              "merging " + std::to_string(i) + " is not antisymmetric");
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            check(!(fam.mergings[i].rows() == fam.mergings[j].rows()),
                  "mergings " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    }
    std::cout << "table B: 27 arrangements, 25 proper, 19 distinct mergings "
                 "(6 doubled fibers, 13 single) ok\n";
}

void verify_galois_table(const std::vector<GaloisConnection>& gs, std::size_t expected,
                         const std::string& name) {
    check(gs.size() == expected, "expected " + std::to_string(expected) + " rows, found " +
                                     std::to_string(gs.size()));
    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        check(is_galois_connection(gs[i]), "row " + std::to_string(i + 1) + ": validator failed");
        check(seen.insert({gs[i].phi, gs[i].psi}).second,
              "row " + std::to_string(i + 1) + ": duplicate connection");
    }
    std::cout << "table " << name << ": " << expected
              << " rows, all distinct valid Galois connections ok\n";
}

void verify_table_d() {
    const auto colorings = enumerate_monotone_colorings(2, 3);
    check(colorings.size() == 26, "expected 26 rows, found " + std::to_string(colorings.size()));
    std::set<std::pair<std::vector<std::pair<std::size_t, std::size_t>>,
                       std::vector<std::pair<std::size_t, std::size_t>>>>
        seen;
    for (std::size_t i = 0; i < colorings.size(); ++i) {
        const Merging m = coloring_to_merging(colorings[i]);
        check(m.is_proper_merging(), "row " + std::to_string(i + 1) + ": not a proper merging");
        check(merging_to_coloring(m) == colorings[i],
              "row " + std::to_string(i + 1) + ": roundtrip mismatch");
        check(seen.insert({m.r.pairs(), m.s.pairs()}).second,
              "row " + std::to_string(i + 1) + ": duplicate merging");
    }
    std::cout << "table D: 26 rows, all distinct proper mergings, roundtrip identity ok\n";
}

int cmd_verify(const std::string& which) {
    try {
        if (which == "A") verify_table_a();
        else if (which == "B") verify_table_b();
        else if (which == "C") verify_galois_table(enumerate_galois_chains(3, 3), 6, "C");
        else if (which == "D") verify_table_d();
        else if (which == "E") verify_galois_table(enumerate_galois_boolean_chain(2, 2), 9, "E");
        else
            throw ParseError("--which must be one of A, B, C, D, E");
    } catch (const VerifyFailure& e) {
        std::cerr << "table " << which << " FAIL: " << e.what() << "\n";
        return kExitDomain;
    }
    std::cout << "table " << which << " PASS\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"proper mergings of chains and antichains: counting, enumeration, bijections"};
    app.require_subcommand(1);

    int exit_code = kExitOk;

    // count
    auto* count = app.add_subcommand("count", "evaluate a closed counting formula");
    std::string count_family;
    std::size_t count_m = 0, count_n = 0;
    int count_l = 0;
    count->add_option("family", count_family,
                      "chains | antichains | antichain-chain | pp | galois-chains | galois-boolean")
        ->required()
        ->check(CLI::IsMember({"chains", "antichains", "antichain-chain", "pp", "galois-chains",
                               "galois-boolean"}));
    count->add_option("--m", count_m, "first size parameter")->required();
    count->add_option("--n", count_n, "second size parameter")->required();
    count->add_option("--l", count_l, "part bound (pp only)")->check(CLI::NonNegativeNumber);
    count->callback([&] { exit_code = cmd_count(count_family, count_m, count_n, count_l); });

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list the mergings of two posets");
    std::string en_p, en_q, en_format = "json";
    bool en_proper = false;
    enumerate->add_option("--p", en_p, "left poset spec (chain:n, antichain:m, @file)")->required();
    enumerate->add_option("--q", en_q, "right poset spec")->required();
    enumerate->add_flag("--proper", en_proper, "restrict to proper mergings");
    enumerate->add_option("--format", en_format, "json | count | dot")
        ->check(CLI::IsMember({"json", "count", "dot"}));
    enumerate->callback([&] { exit_code = cmd_enumerate(en_p, en_q, en_proper, en_format); });

    // map
    auto* map = app.add_subcommand("map", "apply a bijection to a JSON value");
    std::string map_direction, map_input;
    map->add_option("direction", map_direction,
                    "pp-to-merging | merging-to-pp | coloring-to-merging | merging-to-coloring")
        ->required()
        ->check(CLI::IsMember(
            {"pp-to-merging", "merging-to-pp", "coloring-to-merging", "merging-to-coloring"}));
    map->add_option("--input", map_input, "input file ('-' for stdin)")->required();
    map->callback([&] { exit_code = cmd_map(map_direction, map_input); });

    // galois enumerate
    auto* galois = app.add_subcommand("galois", "Galois connections between two lattices");
    auto* galois_enum = galois->add_subcommand("enumerate", "list all Galois connections");
    std::string ga_left, ga_right, ga_format = "table";
    galois_enum->add_option("--left", ga_left, "chain:<m> or boolean:<m>")->required();
    galois_enum->add_option("--right", ga_right, "chain:<n>")->required();
    galois_enum->add_option("--format", ga_format, "table | json | count")
        ->check(CLI::IsMember({"table", "json", "count"}));
    galois->require_subcommand(1);
    galois_enum->callback([&] { exit_code = cmd_galois(ga_left, ga_right, ga_format); });

    // verify appendix
    auto* verify = app.add_subcommand("verify", "re-derive built-in cross-check tables");
    auto* verify_appendix = verify->add_subcommand("appendix", "regenerate one reference table");
    std::string verify_which;
    verify_appendix->add_option("--which", verify_which, "A | B | C | D | E")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C", "D", "E"}));
    verify->require_subcommand(1);
    verify_appendix->callback([&] { exit_code = cmd_verify(verify_which); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return exit_code;
}
