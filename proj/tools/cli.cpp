#include "cli.hpp"

#include <charconv>
#include <ostream>

#include <CLI11.hpp>

#include "kunzsg/cross_validate.hpp"
#include "kunzsg/gas.hpp"
#include "kunzsg/mult3.hpp"
#include "kunzsg/mult4.hpp"
#include "kunzsg/semigroup.hpp"

namespace kunzsg::cli {
namespace {

using nlohmann::json;

std::string joined(const std::vector<Int>& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string bracketed(const std::vector<std::vector<Int>>& factors)
{
    std::string s = "[";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ",";
        s += "[" + joined(factors[i]) + "]";
    }
    return s + "]";
}

std::vector<std::vector<Int>> factor_generators(const Decomposition& d)
{
    std::vector<std::vector<Int>> out;
    for (const auto& f : d.factors) out.push_back(minimal_generators(f));
    return out;
}

std::string coords_text(const KunzVector& x)
{
    const auto c = x.coord_vector();
    return "(" + joined(c) + ")";
}

json document(const std::string& name, const std::vector<std::string>& args, json result)
{
    return json{{"schema_version", kSchemaVersion},
                {"command", {{"name", name}, {"args", args}}},
                {"result", std::move(result)}};
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Input {
    std::string gens;
    std::string kunz;

    KunzVector resolve() const
    {
        if (gens.empty() == kunz.empty()) {
            throw Error(ErrorCode::InvalidKunz, "give exactly one of --gens or --kunz");
        }
        if (!gens.empty()) {
            const auto g = parse_list(gens);
            return from_generators(g).kunz();
        }
        return parse_kunz(kunz);
    }
};

void add_input(CLI::App* sub, Input& in)
{
    sub->add_option("--gens", in.gens, "generators, e.g. 4,31,53");
    sub->add_option("--kunz", in.kunz, "Kunz coordinates, e.g. 4:13,15,7");
}

int cmd_analyze(const KunzVector& x, bool as_json, const std::vector<std::string>& args,
                std::ostream& out)
{
    const auto d = describe(x);
    if (as_json) {
        out << document("analyze", args, d).dump(2) << "\n";
        return Ok;
    }
    const auto& c = d["classification"];
    out << "multiplicity       " << x.multiplicity() << "\n"
        << "kunz               " << joined(x.coord_vector()) << "\n"
        << "generators         " << joined(d["generators"].get<std::vector<Int>>()) << "\n"
        << "frobenius          " << x.frobenius() << "\n"
        << "genus              " << x.genus() << "\n"
        << "gaps               " << joined(d["gaps"].get<std::vector<Int>>()) << "\n"
        << "special gaps > m   " << joined(d["special_gaps"].get<std::vector<Int>>()) << "\n"
        << "special gaps       " << joined(d["special_gaps_all"].get<std::vector<Int>>()) << "\n"
        << "m-irreducible      " << yes_no(c["m_irreducible"]) << "\n"
        << "irreducible        " << yes_no(c["irreducible"]) << "\n"
        << "symmetric          " << yes_no(c["symmetric"]) << "\n"
        << "pseudosymmetric    " << yes_no(c["pseudosymmetric"]) << "\n";
    return Ok;
}

std::vector<Decomposition> decompositions_for(const KunzVector& x, bool all)
{
    if (x.multiplicity() == 3) {
        // unique, so --all and first coincide
        return {mult3::decompose3(mult3::Kunz3::from(x))};
    }
    if (x.multiplicity() == 4) {
        const auto k = mult4::Kunz4::from(x);
        if (all) return mult4::decompose4_all(k);
        return {mult4::decompose4_first(k)};
    }
    if (all) return all_minimal_decompositions(x);
    return {first_minimal_decomposition(x)};
}

Int count_for(const KunzVector& x)
{
    if (x.multiplicity() == 3) return 1;
    if (x.multiplicity() == 4) return mult4::count_decompositions4(mult4::Kunz4::from(x));
    return count_minimal_decompositions(x);
}

int cmd_decompose(const KunzVector& x, bool all, bool count, bool as_json,
                  const std::vector<std::string>& args, std::ostream& out)
{
    if (count) {
        const Int n = count_for(x);
        if (as_json) {
            out << document("decompose", args, {{"kunz", x.coord_vector()}, {"count", n}}).dump(2)
                << "\n";
        } else {
            out << n << "\n";
        }
        return Ok;
    }
    const auto ds = decompositions_for(x, all);
    if (as_json) {
        json list = json::array();
        for (const auto& d : ds) list.push_back(factor_generators(d));
        json r{{"kunz", x.coord_vector()},
               {"multiplicity", x.multiplicity()},
               {"minimal_size", ds.front().factors.size()},
               {"decompositions", list}};
        out << document("decompose", args, r).dump(2) << "\n";
        return Ok;
    }
    for (const auto& d : ds) out << bracketed(factor_generators(d)) << "\n";
    return Ok;
}

int cmd_family(const gas::GasSpec& spec, bool as_json, const std::vector<std::string>& args,
               std::ostream& out)
{
    const auto built = gas::gas_build(spec);
    const auto c = gas::gas_classify(spec);
    const auto& x = built.closed_form;
    if (as_json) {
        json r = describe(x);
        r["spec"] = {{"m", spec.m}, {"h", spec.h}, {"d", spec.d}, {"k", spec.k}};
        r["family_classification"] = {{"irreducible", c.irreducible},
                                      {"symmetric", c.symmetric},
                                      {"pseudosymmetric", c.pseudosymmetric},
                                      {"frobenius", c.frobenius}};
        out << document("family", args, r).dump(2) << "\n";
        return Ok;
    }
    out << "generators         " << joined(spec.generators()) << "\n"
        << "minimal generators " << joined(built.semigroup.generators()) << "\n"
        << "kunz               " << joined(x.coord_vector()) << "\n"
        << "frobenius          " << c.frobenius << "\n"
        << "irreducible        " << yes_no(c.irreducible) << "\n"
        << "symmetric          " << yes_no(c.symmetric) << "\n"
        << "pseudosymmetric    " << yes_no(c.pseudosymmetric) << "\n";
    return Ok;
}

int cmd_enumerate(int m, Int max_coord, const std::string& filter, bool verify, bool as_json,
                  const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::optional<Int> genus;
    if (filter.rfind("genus=", 0) == 0) {
        const auto v = parse_list(filter.substr(6));
        if (v.size() != 1) throw Error(ErrorCode::InvalidSpec, "bad filter '" + filter + "'");
        genus = v.front();
    } else if (filter != "all" && filter != "irreducible") {
        throw Error(ErrorCode::InvalidSpec,
                    "bad filter '" + filter + "', expected all, irreducible or genus=<g>");
    }
    if (m < 2) throw Error(ErrorCode::DegenerateMultiplicity, "multiplicity must be at least 2");
    if (verify && (m > 6 || max_coord > 8)) {
        throw Error(ErrorCode::BoundsExceeded, "--verify needs m <= 6 and max-coord <= 8");
    }

    std::vector<KunzVector> hits;
    for (auto& x : enumerate_kunz_parallel(m, max_coord)) {
        if (genus && x.genus() != *genus) continue;
        if (filter == "irreducible" && !classify(x).irreducible) continue;
        hits.push_back(std::move(x));
    }

    std::size_t failures = 0;
    if (verify) {
        for (const auto& x : hits) {
            auto t = empty_tallies();
            for (const auto& f : check_vector(x, t)) {
                err << "FAIL " << f << "\n";
                ++failures;
            }
        }
    }

    if (as_json) {
        json list = json::array();
        for (const auto& x : hits) list.push_back(x.coord_vector());
        json r{{"multiplicity", m}, {"max_coord", max_coord}, {"filter", filter},
               {"vectors", list}};
        if (verify) r["verify_failures"] = failures;
        out << document("enumerate", args, r).dump(2) << "\n";
    } else {
        for (const auto& x : hits) out << coords_text(x) << "\n";
    }
    return failures == 0 ? Ok : VerifyFailed;
}

int cmd_verify(int m, Int max_coord, bool as_json, const std::vector<std::string>& args,
               std::ostream& out)
{
    const auto rep = cross_validate(m, max_coord);
    if (as_json) {
        json checks = json::array();
        for (const auto& c : rep.checks) {
            checks.push_back({{"name", c.name},
                              {"checked", c.checked},
                              {"failed", c.failed},
                              {"pass", c.failed == 0}});
        }
        json r{{"multiplicity", m},          {"max_coord", max_coord},
               {"vectors", rep.vectors},     {"checks", checks},
               {"failures", rep.failures},   {"notes", rep.notes},
               {"pass", rep.ok()}};
        out << document("verify", args, r).dump(2) << "\n";
    } else {
        out << "verified " << rep.vectors << " Kunz vectors, m=" << m << ", coords <= " << max_coord
            << "\n";
        for (const auto& c : rep.checks) {
            out << (c.failed == 0 ? "PASS " : "FAIL ") << c.name << " (" << c.checked - c.failed
                << "/" << c.checked << ")\n";
        }
        for (const auto& f : rep.failures) out << "failure: " << f << "\n";
        for (const auto& n : rep.notes) out << "note: " << n << "\n";
    }
    return rep.ok() ? Ok : VerifyFailed;
}

}  // namespace

std::vector<Int> parse_list(const std::string& text)
{
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto next = std::min(text.find(',', pos), text.size());
        const auto* first = text.data() + pos;
        const auto* last = text.data() + next;
        while (first < last && *first == ' ') ++first;
        while (last > first && last[-1] == ' ') --last;
        Int v = 0;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last) {
            throw Error(ErrorCode::InvalidGenerator,
                        "cannot parse '" + std::string(first, last) + "' as an integer");
        }
        out.push_back(v);
        pos = next + 1;
    }
    return out;
}

KunzVector parse_kunz(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw Error(ErrorCode::InvalidKunz, "expected m:x1,...,x(m-1), got '" + text + "'");
    }
    const auto head = parse_list(text.substr(0, colon));
    if (head.size() != 1 || head.front() < 1 || head.front() > 64) {
        throw Error(ErrorCode::InvalidKunz, "multiplicity must be an integer in [1, 64]");
    }
    const int m = static_cast<int>(head.front());
    const auto tail = text.substr(colon + 1);
    std::vector<Int> coords;
    if (!tail.empty()) coords = parse_list(tail);
    if (static_cast<int>(coords.size()) != m - 1) {
        throw Error(ErrorCode::InvalidKunz, "expected " + std::to_string(m - 1)
                                                + " coordinates, got "
                                                + std::to_string(coords.size()));
    }
    return KunzVector(m, std::move(coords));
}

json describe(const KunzVector& x)
{
    const auto c = classify(x);
    return json{{"multiplicity", x.multiplicity()},
                {"kunz", x.coord_vector()},
                {"generators", minimal_generators(x)},
                {"frobenius", x.frobenius()},
                {"genus", x.genus()},
                {"gaps", gaps(x)},
                {"special_gaps", special_gaps_over_m(x).values()},
                {"special_gaps_all", special_gaps_all(x)},
                {"classification",
                 {{"m_irreducible", c.m_irreducible},
                  {"irreducible", c.irreducible},
                  {"symmetric", c.symmetric},
                  {"pseudosymmetric", c.pseudosymmetric},
                  {"m_symmetric", c.m_symmetric},
                  {"m_pseudosymmetric", c.m_pseudosymmetric}}}};
}

KunzVector kunz_from_descriptor(const json& j)
{
    return KunzVector(j.at("multiplicity").get<int>(), j.at("kunz").get<std::vector<Int>>());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Kunz-coordinate toolkit for numerical semigroups", "kunzsg"};
    app.require_subcommand(1);
    bool as_json = false;

    Input in;
    auto* analyze = app.add_subcommand("analyze", "describe and classify a semigroup");
    add_input(analyze, in);
    analyze->add_flag("--json", as_json, "structured output");

    bool all = false, count = false;
    auto* decompose = app.add_subcommand("decompose", "minimal decompositions into m-irreducibles");
    add_input(decompose, in);
    auto* all_opt = decompose->add_flag("--all", all, "list every minimal decomposition");
    decompose->add_flag("--count", count, "print the number of minimal decompositions")
        ->excludes(all_opt);
    decompose->add_flag("--json", as_json, "structured output");

    gas::GasSpec spec{0, 0, 0, 0};
    auto* family = app.add_subcommand("family", "<m, mh+d, ..., mh+kd> for m = 3, 4");
    family->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    family->add_option("--m", spec.m)->required();
    family->add_option("--h", spec.h)->required();
    family->add_option("--d", spec.d)->required();
    family->add_option("--k", spec.k)->required();
    family->add_flag("--json", as_json, "structured output");

    int m = 0;
    Int max_coord = 0;
    std::string filter = "all";
    bool verify_each = false;
    auto* enumerate = app.add_subcommand("enumerate", "Kunz vectors in a box, lexicographic");
    enumerate->add_option("--m", m)->required();
    enumerate->add_option("--max-coord", max_coord)->required();
    enumerate->add_option("--filter", filter, "all | irreducible | genus=<g>");
    enumerate->add_flag("--verify", verify_each, "check each vector against the oracle");
    enumerate->add_flag("--json", as_json, "structured output");

    auto* verify = app.add_subcommand("verify", "engine vs closed forms vs brute force");
    verify->add_option("--m", m)->required();
    verify->add_option("--max-coord", max_coord)->required();
    verify->add_flag("--json", as_json, "structured output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(in.resolve(), as_json, args, out);
        if (decompose->parsed()) return cmd_decompose(in.resolve(), all, count, as_json, args, out);
        if (family->parsed()) return cmd_family(spec, as_json, args, out);
        if (enumerate->parsed()) {
            return cmd_enumerate(m, max_coord, filter, verify_each, as_json, args, out, err);
        }
        if (verify->parsed()) return cmd_verify(m, max_coord, as_json, args, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}

}  // namespace kunzsg::cli
