#include "kunzsg/printed.hpp"

#include <algorithm>
#include <set>

#include "kunzsg/oracle.hpp"

namespace kunzsg::printed {
namespace {

using mult4::Kunz4;

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::string triple_text(const Triple& t)
{
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2])
           + ")";
}

std::string list_text(const std::vector<Int>& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::string gens_text(const std::vector<Int>& g)
{
    std::string s = "<";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g[i]);
    }
    return s + ">";
}

std::string set_text(const std::set<Triple>& s)
{
    std::string out = "{";
    for (const auto& t : s) out += (out.size() > 1 ? "," : "") + triple_text(t);
    return out + "}";
}

bool valid_triple(const Triple& t)
{
    return t[0] >= 1 && t[1] >= 1 && t[2] >= 1
           && Kunz4{t[0], t[1], t[2]}.valid();
}

std::set<Triple> members_of(Kunz4 x, int cls)
{
    std::set<Triple> out;
    for (const auto& v : mult4::candidate_family4(x, cls).members(x)) {
        out.insert({v.at_class(1), v.at_class(2), v.at_class(3)});
    }
    return out;
}

// Intersection of the listed semigroups equals the one generated by `target`,
// checked on bitmaps up to a common bound.
bool intersects_to(const std::vector<std::vector<Int>>& factors, const std::vector<Int>& target)
{
    const auto s = oracle::ElementTable::generated_by(target);
    std::vector<oracle::ElementTable> parts;
    Int bound = s.bound();
    for (const auto& f : factors) {
        parts.push_back(oracle::ElementTable::generated_by(f));
        bound = std::max(bound, parts.back().bound());
    }
    for (Int n = 0; n <= bound; ++n) {
        bool all = true;
        for (const auto& p : parts) all = all && p.contains(n);
        if (all != s.contains(n)) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<Int>> sg4_table(Kunz4 x)
{
    const Int a = x.x1, b = x.x2, c = x.x3;
    const Int h1 = 4 * a - 3, h2 = 4 * b - 2, h3 = 4 * c - 1;
    using V = std::vector<Int>;
    std::optional<V> r;
    if (a == 1 && b == 1 && c == 1) r = V{};
    else if (a + b >= c + 1 && 2 * a >= b + 2 && b + c <= a - 1) r = V{h1};
    else if (a + b >= c + 1 && 2 * a >= b + 2 && b == 1 && 2 * c <= b) r = V{h1};
    else if (a + b >= c + 1 && 2 * a >= b + 2 && b == 1 && b + c <= a - 1) r = V{h1};
    else if (a == 2 && b == 1 && c == 1) r = V{h1};
    else if (a + b >= c + 1 && b + c >= a && 2 * a <= b + 1 && 2 * c <= b) r = V{h2};
    else if (b + c >= a && 2 * c >= b + 1 && a + b <= c) r = V{h3};
    else if (a + b >= c + 1 && 2 * a >= b + 2 && b + c >= a && 2 * c >= b + 1 && a >= 2 && b >= 2)
        r = V{h1, h2};
    else if (a + b >= c + 1 && 2 * a <= b + 1 && b + c >= a && 2 * c >= b + 1 && a >= 2 && b >= 2)
        r = V{h1, h3};
    else if (b == 1 && c <= a && c >= a - 1 && a >= 2 && c >= 2) r = V{h1, h3};
    else if (a + b >= c + 1 && b + c >= a && 2 * c >= b + 1 && 2 * a <= b + 1 && b >= 2 && c >= 2)
        r = V{h2, h3};
    else if (a + b >= c + 1 && 2 * a >= b + 2 && b + c >= a && 2 * c >= b + 1 && b >= 2 && c >= 2)
        r = V{h1, h2, h3};
    if (r) std::sort(r->begin(), r->end());
    return r;
}

std::vector<Triple> family4_rows(Kunz4 x, int cls)
{
    const Int a = x.x1, b = x.x2, c = x.x3;
    std::vector<Triple> out;
    if (cls == 1) {
        for (Int y2 = std::max<Int>(0, b - a); y2 <= b - 1; ++y2) {
            out.push_back({a, b - y2, c - (-a + b + c + 1 - y2)});
        }
        return out;
    }
    // y_1 in [x_1 - x_3 + 1, x_1 - x_3/3]
    const Int lo = std::max<Int>(0, a - c + 1);
    const Int hi = floor_div(3 * a - c, 3);
    for (Int y1 = lo; y1 <= hi; ++y1) {
        if (cls == 2) out.push_back({a - y1, b, c - (a - b + c - y1)});
        else out.push_back({a - y1, b - (a + b + c - y1), c});
    }
    return out;
}

std::optional<Int> count4_formula(Kunz4 x)
{
    const auto sg = mult4::sg4(x);
    if (sg.size() != 2) return std::nullopt;
    const int i = sg.entries()[0].residue < sg.entries()[1].residue ? sg.entries()[0].residue
                                                                   : sg.entries()[1].residue;
    const int j = sg.entries()[0].residue ^ sg.entries()[1].residue ^ i;
    const Int f = floor_div(2 * x.x3, 3);
    if (i == 2 && j == 3) return f * f;
    return f * x.x1;
}

std::vector<std::string> corpus_notes(const std::vector<KunzVector>& corpus)
{
    std::size_t n4 = 0, table_bad = 0, fam_pairs = 0, fam_bad = 0, fam_invalid = 0, cnt_total = 0,
                cnt_bad = 0;
    std::string table_eg, fam_eg, cnt_eg;
    for (const auto& v : corpus) {
        if (v.multiplicity() != 4) continue;
        ++n4;
        const auto x = Kunz4::from(v);
        const auto sg = mult4::sg4(x);
        const auto actual = sg.values();

        const auto table = sg4_table(x);
        if (!table || *table != actual) {
            if (table_bad++ == 0) {
                table_eg = v.to_string() + " printed "
                           + (table ? list_text(*table) : std::string("no row")) + " actual "
                           + list_text(actual);
            }
        }

        for (const auto& e : sg.entries()) {
            ++fam_pairs;
            const auto rows = family4_rows(x, e.residue);
            std::set<Triple> printed_valid;
            for (const auto& t : rows) {
                if (valid_triple(t)) printed_valid.insert(t);
                else ++fam_invalid;
            }
            const auto truth = members_of(x, e.residue);
            if (printed_valid != truth) {
                if (fam_bad++ == 0) {
                    fam_eg = v.to_string() + " class " + std::to_string(e.residue) + " printed "
                             + set_text(printed_valid) + " actual " + set_text(truth);
                }
            }
        }

        if (const auto c = count4_formula(x)) {
            ++cnt_total;
            const Int actual_count = mult4::count_decompositions4(x);
            if (*c != actual_count) {
                if (cnt_bad++ == 0) {
                    cnt_eg = v.to_string() + " printed " + std::to_string(*c) + " actual "
                             + std::to_string(actual_count);
                }
            }
        }
    }
    std::vector<std::string> notes;
    if (n4 == 0) return notes;
    auto frac = [](std::size_t bad, std::size_t total) {
        return std::to_string(bad) + "/" + std::to_string(total);
    };
    notes.push_back("printed SG_4 case table: " + frac(table_bad, n4) + " vectors disagree"
                    + (table_bad ? " (e.g. " + table_eg + ")" : ""));
    notes.push_back("printed candidate-family intervals: " + frac(fam_bad, fam_pairs)
                    + " (vector, class) pairs disagree, " + std::to_string(fam_invalid)
                    + " printed rows are not Kunz vectors"
                    + (fam_bad ? " (e.g. " + fam_eg + ")" : ""));
    notes.push_back("printed two-gap count formula: " + frac(cnt_bad, cnt_total)
                    + " vectors disagree" + (cnt_bad ? " (e.g. " + cnt_eg + ")" : ""));
    return notes;
}

std::vector<ExampleFact> example_facts()
{
    std::vector<ExampleFact> out;
    {
        const std::vector<Int> s{4, 31, 53};
        const std::vector<std::vector<Int>> f{{4, 15}, {4, 21, 43}};
        const auto t = oracle::ElementTable::generated_by(f[1]);
        const bool holds = intersects_to(f, s);
        out.push_back({gens_text(s) + " = <4,15> & <4,21,43>", holds,
                       std::string("31 ") + (t.contains(31) ? "is" : "is not")
                           + " in <4,21,43>, so it is not an oversemigroup"});
    }
    {
        const auto r = oracle::brute_minimal_decompositions(KunzVector(4, {13, 15, 7}));
        const auto n = static_cast<Int>(r.decompositions.size());
        out.push_back({"<4,31,53> has 52 minimal decompositions", n == 52,
                       "enumerated count is " + std::to_string(n)});
    }
    {
        const std::vector<Int> s{4, 18, 21, 23};
        const std::vector<std::vector<Int>> f{{4, 11, 18}, {4, 10, 11}, {4, 6, 13}};
        const Int fr = oracle::ElementTable::generated_by(f[2]).frobenius();
        bool in_all = true;
        for (const auto& g : f) in_all = in_all && oracle::ElementTable::generated_by(g).contains(19);
        out.push_back({"<4,18,21,23> = <4,11,18> & <4,10,11> & <4,6,13>", intersects_to(f, s),
                       "<4,6,13> has Frobenius number " + std::to_string(fr) + ", not 19"
                           + (in_all ? "; 19 lies in every factor" : "")});
    }
    return out;
}

}  // namespace kunzsg::printed
