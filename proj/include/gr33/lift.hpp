// Lifting classification: which invariant operators between parabolic
// Verma modules extend to the semi-holonomic setting, plus the replayable
// verification of every table, diagram, and translation argument the
// classification rests on.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gr33/pattern.hpp"
#include "gr33/translate.hpp"
#include "gr33/weights.hpp"

namespace gr33 {

struct ArrowNotInPattern : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class LiftVerdict { Lifts, NoLift, Unknown };
enum class LiftReason {
    OrderAtMostTwo,
    SingularCharacter,
    RegularCovered,
    ProvenObstruction,
    ConjecturedNo,
};

const char* verdict_name(LiftVerdict v);
const char* reason_name(LiftReason r);

struct LiftStatus {
    LiftVerdict verdict;
    LiftReason reason;
    std::string detail;
};

LiftStatus lift_status(const Pattern& p, const Arrow& a);
LiftStatus lift_status(const Pattern& p, const PDomWeight& src, const PDomWeight& tgt);

// Lift statuses for every arrow of the pattern, in arrow order.
std::vector<LiftStatus> annotate(const Pattern& p);

// Comparison of a recomputed factor list against its published form.
struct ListDiff {
    std::string name;
    std::vector<std::string> expected;
    std::vector<std::string> computed;
    std::vector<std::string> defects;   // "name[i]: printed X, computed Y"
    bool match = false;                 // equal up to recorded defects
};

struct ReplayStep {
    std::string label;
    std::vector<ListDiff> lists;
    std::optional<TranslationCertificate> certificate;
    std::vector<std::string> notes;
    std::vector<std::string> flagged;   // print defects detected in the source
    bool pass = false;
};

struct ReplayReport {
    std::vector<ReplayStep> steps;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> flagged;

    void add(ReplayStep step);
    bool all_passed() const { return failed == 0; }
};

// Recomputes the published classification tables: the 2-singular two-node
// patterns, the 1-singular six-node diamonds, and the regular twenty-node
// diagram with its nonstandard arrows.
ReplayReport verify_tables();

// Replays every translation argument used in the singular cases.
ReplayReport replay_singular();

// Replays every translation argument used in the regular case.
ReplayReport replay_regular();

ReplayReport verify_all();

std::string report_text(const ReplayReport& r);

}  // namespace gr33
