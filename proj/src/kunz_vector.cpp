#include "kunzsg/kunz_vector.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kunzsg {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NonCoprimeGenerators: return "NonCoprimeGenerators";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::NotAnElement: return "NotAnElement";
    case ErrorCode::InvalidKunz: return "InvalidKunz";
    case ErrorCode::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorCode::DegenerateMultiplicity: return "DegenerateMultiplicity";
    case ErrorCode::NotASpecialGap: return "NotASpecialGap";
    case ErrorCode::InputIsIrreducible: return "InputIsIrreducible";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::BoundsExceeded: return "BoundsExceeded";
    case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

std::string Violation::describe() const
{
    std::ostringstream os;
    switch (kind) {
    case Kind::Positivity:
        os << "x_" << i << " >= 1";
        break;
    case Kind::Additive:
    case Kind::Wrapped:
        if (i == j) {
            os << "2x_" << i;
        } else {
            os << "x_" << i << " + x_" << j;
        }
        os << " >= x_" << target;
        if (kind == Kind::Wrapped) os << " - 1";
        break;
    }
    return os.str();
}

KunzVerdict validate_kunz(int multiplicity, std::span<const Int> coords)
{
    if (multiplicity < 1) {
        throw Error(ErrorCode::InvalidKunz, "multiplicity must be at least 1");
    }
    const auto m = static_cast<std::size_t>(multiplicity);
    if (coords.size() != m - 1) {
        throw Error(ErrorCode::InvalidKunz,
                    "expected " + std::to_string(m - 1) + " coordinates for multiplicity "
                        + std::to_string(m) + ", got " + std::to_string(coords.size()));
    }

    KunzVerdict verdict;
    auto x = [&](int r) { return coords[static_cast<std::size_t>(r - 1)]; };
    for (int i = 1; i < multiplicity; ++i) {
        if (x(i) < 1) verdict.violations.push_back({Violation::Kind::Positivity, i, i, i});
    }
    for (int i = 1; i < multiplicity; ++i) {
        for (int j = i; j < multiplicity; ++j) {
            const int s = i + j;
            if (s < multiplicity) {
                if (x(i) + x(j) < x(s)) {
                    verdict.violations.push_back({Violation::Kind::Additive, i, j, s});
                }
            } else if (s > multiplicity) {
                if (x(i) + x(j) < x(s - multiplicity) - 1) {
                    verdict.violations.push_back(
                        {Violation::Kind::Wrapped, i, j, s - multiplicity});
                }
            }
        }
    }
    return verdict;
}

KunzVector::KunzVector(int multiplicity, std::vector<Int> coords)
    : m_(multiplicity), coords_(std::move(coords))
{
    const auto verdict = validate_kunz(m_, coords_);
    if (!verdict.ok()) {
        throw Error(ErrorCode::InvalidKunz,
                    "not a Kunz-coordinates vector: violated "
                        + verdict.violations.front().describe());
    }
}

KunzVector KunzVector::trusted(int multiplicity, std::vector<Int> coords)
{
    return KunzVector(TrustedTag{}, multiplicity, std::move(coords));
}

KunzVector KunzVector::ordinary(int multiplicity)
{
    if (multiplicity < 1) {
        throw Error(ErrorCode::InvalidKunz, "multiplicity must be at least 1");
    }
    return trusted(multiplicity, std::vector<Int>(static_cast<std::size_t>(multiplicity - 1), 1));
}

Int KunzVector::apery(int r) const
{
    if (r == 0) return 0;
    return checked::add(checked::mul(m_, at_class(r)), r);
}

Int KunzVector::genus() const noexcept
{
    return std::accumulate(coords_.begin(), coords_.end(), Int{0});
}

Int KunzVector::frobenius() const
{
    if (m_ == 1) return -1;
    Int best = 0;
    for (int r = 1; r < m_; ++r) best = std::max(best, apery(r));
    return best - m_;
}

bool KunzVector::is_ordinary() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](Int v) { return v == 1; });
}

std::string KunzVector::to_string() const
{
    std::ostringstream os;
    os << m_ << ":";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i];
    }
    return os.str();
}

bool componentwise_leq(const KunzVector& a, const KunzVector& b)
{
    if (a.multiplicity() != b.multiplicity()) return false;
    const auto ca = a.coords();
    const auto cb = b.coords();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] > cb[i]) return false;
    }
    return true;
}

}  // namespace kunzsg
