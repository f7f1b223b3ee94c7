#pragma once

#include "qmdt/corr.hpp"
#include "qmdt/profile.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmdt {

enum class Side : std::uint8_t { Lo, Up };

// i_lo (0 <= i < r) or i^up (d_X - r < i <= d_X).
struct LambdaSymbol {
    Side side = Side::Lo;
    int i = 0;
    auto operator<=>(const LambdaSymbol&) const = default;
};

inline LambdaSymbol lo(int i) { return {Side::Lo, i}; }
inline LambdaSymbol up(int i) { return {Side::Up, i}; }

std::string symbolText(LambdaSymbol x);

using Block = std::vector<LambdaSymbol>;
using SymbolPair = std::pair<LambdaSymbol, LambdaSymbol>;

struct MdtPartition {
    std::vector<Block> blocks;

    // Sorts symbols inside blocks and blocks among themselves.
    void canonicalize();
    auto operator<=>(const MdtPartition&) const = default;
};

std::string partitionText(const MdtPartition& p);

// Symbol windows for a quadric of dimension dX with r lower symbols.
bool inWindow(LambdaSymbol x, int r, int dX);
std::vector<LambdaSymbol> lambdaSet(int r, int dX);
std::vector<LambdaSymbol> lambdaSet(const Profile& p);

Block shiftBlock(const Block& b, int k);
std::optional<int> lowerEnd(const Block& b); // a(block)
std::optional<int> upperEnd(const Block& b); // b(block)
bool coBlocked(const MdtPartition& p, LambdaSymbol x, LambdaSymbol y);

// h^i x l_i for i_lo, l_{d_X-i} x h^{d_X-i} for i^up. Throws OutOfWindow.
Corr alphaCycle(LambdaSymbol x, const Profile& p);

// (j_{t-1}+i)_lo <-> (d_X - (j_t - 1 - i))^up for 1 <= t <= h, 0 <= i <= i_t - 1.
std::vector<SymbolPair> forcedConnections(const Profile& p);
// Pfister-neighbour connections of every kernel in the tower that is
// recognisably a virtual Pfister neighbour, lifted back to X.
std::vector<SymbolPair> vpnConnections(const Profile& p);
bool isVirtualPfisterNeighbour(const Profile& p);
std::vector<SymbolPair> excellentConnections(const Profile& p);

enum class Rule : unsigned { Parity, Dual, Endpoint, Shift, Upper, Karpenko, Exc, Vpn, Vishik };
constexpr int kRuleCount = 9;

enum class Provenance { Proven, Conjectural, InterpretationSensitive };

std::string ruleId(Rule rule);
Rule parseRuleId(const std::string& id);
std::string provenanceName(Provenance p);
// Excellent connections are a theorem only for s <= 1.
Provenance provenance(Rule rule, const Profile& p);

// Which formula R-ENDPOINT checks for blocks past the start of a shell.
enum class EndpointReading { Relative, Printed };

struct RuleSet {
    unsigned mask = 0;
    EndpointReading endpoint = EndpointReading::Relative;

    bool has(Rule r) const { return (mask >> static_cast<unsigned>(r)) & 1u; }
    RuleSet& enable(Rule r);
    RuleSet& disable(Rule r);
    std::vector<Rule> rules() const;

    // Every rule whose provenance for this profile is Proven.
    static RuleSet proven(const Profile& p);
    // Comma-separated rule ids; "proven" expands to RuleSet::proven(p).
    static RuleSet parse(const std::string& ids, const Profile& p);
};

struct Violation {
    std::string rule;
    std::string witness;
};

// Throws InvalidPartition when the blocks do not partition lambdaSet(p).
std::vector<Violation> checkPartition(const Profile& p, const MdtPartition& partition, const RuleSet& rules);

struct EnumerateOptions {
    int maxR = 8;
    int maxAtoms = 12;
};

// All partitions with no violations, canonically sorted. Branches run on OpenMP threads.
std::vector<MdtPartition> enumerateMDT(const Profile& p, const RuleSet& rules, const EnumerateOptions& opt = {});
// Single-threaded reference with the same contract.
std::vector<MdtPartition> enumerateMDTSerial(const Profile& p, const RuleSet& rules,
                                             const EnumerateOptions& opt = {});

MdtPartition mdtHeightOne(const Profile& p);
MdtPartition mdtPfisterNeighbour(const Profile& p, const MdtPartition& inner);
MdtPartition mdtStronglyExcellent(const std::vector<int>& nList, int s);
// MDT of an isotropic form with Witt index w over an anisotropic part with innerProfile.
MdtPartition mdtIsotropicLift(int w, const MdtPartition& inner, const Profile& innerProfile);

} // namespace qmdt
