#include "kunzsg/cross_validate.hpp"

#include <algorithm>
#include <set>

#include "kunzsg/mult3.hpp"
#include "kunzsg/mult4.hpp"
#include "kunzsg/oracle.hpp"
#include "kunzsg/parallel.hpp"
#include "kunzsg/printed.hpp"
#include "kunzsg/semigroup.hpp"

namespace kunzsg {
namespace {

const std::vector<std::string> kCheckNames{
    "special-gaps-formula", "special-gaps-definition", "selmer",     "m-irreducibility",
    "irreducibility",       "oversemigroups",          "decompositions", "iso-decomposability",
    "mult3",                "mult4",
};

std::string join(const std::vector<Int>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

using FactorSet = std::vector<KunzVector>;

FactorSet normalized(std::vector<KunzVector> f)
{
    std::sort(f.begin(), f.end());
    return f;
}

std::set<FactorSet> decomposition_set(const std::vector<Decomposition>& ds)
{
    std::set<FactorSet> out;
    for (const auto& d : ds) out.insert(normalized(d.factors));
    return out;
}

class Recorder {
public:
    Recorder(const KunzVector& x, std::vector<CheckTally>& t) : x_(x), tallies_(t) {}

    void expect(const std::string& check, bool ok, const std::string& detail)
    {
        auto it = std::find_if(tallies_.begin(), tallies_.end(),
                               [&](const CheckTally& c) { return c.name == check; });
        ++it->checked;
        if (!ok) {
            ++it->failed;
            failures_.push_back(x_.to_string() + ": " + check + ": " + detail);
        }
    }

    std::vector<std::string> take() { return std::move(failures_); }

private:
    const KunzVector& x_;
    std::vector<CheckTally>& tallies_;
    std::vector<std::string> failures_;
};

void check_mult3(const KunzVector& x, Recorder& r)
{
    const auto k = mult3::Kunz3::from(x);
    const auto sg = special_gaps_over_m(x);
    r.expect("mult3", mult3::sg3(k).values() == sg.values(),
             "closed-form SG " + join(mult3::sg3(k).values()) + " vs " + join(sg.values()));
    const auto cls = classify(x);
    r.expect("mult3", mult3::is_irreducible3(k) == cls.irreducible, "irreducibility");
    if (cls.irreducible) return;

    const auto fast = normalized(mult3::decompose3(k).factors);
    const auto all = all_minimal_decompositions(x);
    r.expect("mult3", all.size() == 1, "expected a unique decomposition, got "
                                           + std::to_string(all.size()));
    r.expect("mult3", !all.empty() && fast == normalized(all.front().factors),
             "closed-form decomposition differs from the engine");

    for (const auto& u : mult3::irreducible_undercoordinates3(k)) {
        const auto v = u.to_kunz();
        r.expect("mult3", componentwise_leq(v, x) && oracle::brute_m_irreducible(v),
                 v.to_string() + " is not an irreducible undercoordinate");
    }
    const auto d3 = mult3::classify3_decomposability(k);
    r.expect("mult3", d3.sym_decomposable == iso_decomposability(x, Parity::Odd).decomposable,
             "symmetric decomposability");
    r.expect("mult3", d3.psym_decomposable == iso_decomposability(x, Parity::Even).decomposable,
             "pseudosymmetric decomposability");
}

void check_mult4(const KunzVector& x, Recorder& r)
{
    const auto k = mult4::Kunz4::from(x);
    const auto sg = special_gaps_over_m(x);
    r.expect("mult4", mult4::sg4(k).values() == sg.values(),
             "closed-form SG " + join(mult4::sg4(k).values()) + " vs " + join(sg.values()));
    const auto cls = classify(x);
    const auto irr = mult4::is_irreducible4(k);
    r.expect("mult4", irr.four_irreducible == cls.m_irreducible && irr.irreducible == cls.irreducible,
             "irreducibility flags");
    r.expect("mult4", mult4::irreducible_undercoordinates4(k) == irreducible_undercoordinates(x),
             "irreducible undercoordinates");
    for (const auto& e : sg.entries()) {
        std::vector<KunzVector> engine;
        for (const auto& c : irreducible_candidates(x, e.gap).candidates) engine.push_back(c.kunz);
        std::sort(engine.begin(), engine.end());
        r.expect("mult4", mult4::candidate_family4(k, e.residue).members(k) == engine,
                 "candidate family for " + std::to_string(e.gap));
    }
    const auto fast = mult4::decompose4_all(k);
    r.expect("mult4", decomposition_set(fast) == decomposition_set(all_minimal_decompositions(x)),
             "decompositions");
    r.expect("mult4", mult4::count_decompositions4(k) == count_minimal_decompositions(x), "count");
}

}  // namespace

std::vector<CheckTally> empty_tallies()
{
    std::vector<CheckTally> out;
    for (const auto& n : kCheckNames) out.push_back({n, 0, 0});
    return out;
}

std::vector<std::string> check_vector(const KunzVector& x, std::vector<CheckTally>& checks)
{
    Recorder r(x, checks);
    const int m = x.multiplicity();

    const auto sg = special_gaps_over_m(x);
    const auto brute_all = oracle::brute_special_gaps(x);
    std::vector<Int> brute_over;
    for (Int h : brute_all) {
        if (h > m) brute_over.push_back(h);
    }
    r.expect("special-gaps-formula", sg.values() == brute_over,
             join(sg.values()) + " vs brute " + join(brute_over));
    r.expect("special-gaps-definition", special_gaps_all(x) == brute_all,
             join(special_gaps_all(x)) + " vs brute " + join(brute_all));

    const auto table = oracle::ElementTable::of(x);
    const auto gaps = table.gaps();
    r.expect("selmer",
             x.frobenius() == table.frobenius() && x.genus() == static_cast<Int>(gaps.size()),
             "F=" + std::to_string(x.frobenius()) + " g=" + std::to_string(x.genus())
                 + " vs brute F=" + std::to_string(table.frobenius())
                 + " g=" + std::to_string(gaps.size()));

    const auto cls = classify(x);
    const bool brute_mirr = oracle::brute_m_irreducible(x);
    r.expect("m-irreducibility",
             cls.m_irreducible == brute_mirr && m_irreducible_by_genus(x) == brute_mirr
                 && (sg.size() <= 1) == brute_mirr,
             "engine " + std::to_string(cls.m_irreducible) + " brute "
                 + std::to_string(brute_mirr));
    const bool brute_irr = oracle::brute_irreducible(x);
    const bool odd = table.frobenius() % 2 != 0;
    r.expect("irreducibility",
             cls.irreducible == brute_irr && cls.symmetric == (brute_irr && odd)
                 && cls.pseudosymmetric == (brute_irr && !odd)
                 && cls.m_symmetric == (brute_mirr && odd)
                 && cls.m_pseudosymmetric == (brute_mirr && !odd),
             "classification flags");

    const auto box = oracle::enumerate_oversemigroups(x);
    const auto adj = oracle::oversemigroups_by_adjunction(x);
    r.expect("oversemigroups", box == adj,
             std::to_string(box.size()) + " by box scan vs " + std::to_string(adj.size())
                 + " by adjunction");

    const auto engine_all = all_minimal_decompositions(x);
    const auto brute = oracle::brute_minimal_decompositions(x);
    std::set<FactorSet> brute_set(brute.decompositions.begin(), brute.decompositions.end());
    r.expect("decompositions", decomposition_set(engine_all) == brute_set,
             std::to_string(engine_all.size()) + " engine vs "
                 + std::to_string(brute.decompositions.size()) + " brute");
    r.expect("decompositions",
             count_minimal_decompositions(x) == static_cast<Int>(brute.decompositions.size()),
             "count");
    for (const auto& d : engine_all) {
        bool factors_ok = static_cast<int>(d.factors.size()) == brute.min_size;
        for (const auto& f : d.factors) {
            factors_ok = factors_ok && oracle::brute_m_irreducible(f) && componentwise_leq(f, x);
        }
        r.expect("decompositions", factors_ok && intersect(d.factors) == x,
                 "factor check failed");
    }

    for (bool want_odd : {true, false}) {
        const auto v = iso_decomposability(x, want_odd ? Parity::Odd : Parity::Even);
        const bool b = oracle::brute_iso_decomposable(x, want_odd);
        bool witness_ok = !v.decomposable || (v.witness && intersect(v.witness->factors) == x);
        r.expect("iso-decomposability", v.decomposable == b && witness_ok,
                 std::string(want_odd ? "odd" : "even") + " parity: engine "
                     + std::to_string(v.decomposable) + " brute " + std::to_string(b));
    }

    if (m == 3) check_mult3(x, r);
    if (m == 4) check_mult4(x, r);
    return r.take();
}

namespace {

CrossReport run(int m, Int bound, bool parallel)
{
    if (m < 2 || m > 6 || bound < 1 || bound > 8) {
        throw Error(ErrorCode::BoundsExceeded,
                    "cross validation needs 2 <= m <= 6 and 1 <= bound <= 8, got m="
                        + std::to_string(m) + " bound=" + std::to_string(bound));
    }
    const auto corpus = parallel ? enumerate_kunz_parallel(m, bound) : enumerate_kunz(m, bound);
    std::vector<std::vector<CheckTally>> tallies(corpus.size(), empty_tallies());
    std::vector<std::vector<std::string>> failures(corpus.size());
    auto body = [&](std::size_t i) { failures[i] = check_vector(corpus[i], tallies[i]); };
    if (parallel) {
        parallel_for(std::size_t{0}, corpus.size(), body);
    } else {
        for (std::size_t i = 0; i < corpus.size(); ++i) body(i);
    }

    CrossReport rep;
    rep.multiplicity = m;
    rep.bound = bound;
    rep.vectors = corpus.size();
    rep.checks = empty_tallies();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t c = 0; c < rep.checks.size(); ++c) {
            rep.checks[c].checked += tallies[i][c].checked;
            rep.checks[c].failed += tallies[i][c].failed;
        }
        rep.failures.insert(rep.failures.end(), failures[i].begin(), failures[i].end());
    }
    std::erase_if(rep.checks, [](const CheckTally& c) { return c.checked == 0; });

    rep.notes = printed::corpus_notes(corpus);
    for (const auto& f : printed::example_facts()) {
        rep.notes.push_back("printed example " + f.label + ": "
                            + (f.printed_value_holds ? "confirmed" : "does not hold") + " ("
                            + f.detail + ")");
    }
    return rep;
}

}  // namespace

CrossReport cross_validate(int multiplicity, Int bound) { return run(multiplicity, bound, true); }

CrossReport cross_validate_serial(int multiplicity, Int bound)
{
    return run(multiplicity, bound, false);
}

}  // namespace kunzsg
