#pragma once

// Uniform result type for bounded-search analyses. The paper quantifies over
// infinite sets; a desk-scale tool must be able to answer "yes, with this
// witness", "no, here is a counterexample", or "the search bound ran out".

#include "tropext/integers.hpp"
#include "tropext/semifield.hpp"

#include <utility>
#include <vector>

namespace tropext {

class Verdict {
public:
    enum class Kind { yes, no, unknown };

    static Verdict yes(std::vector<SemifieldElement> certificate) {
        return Verdict(Kind::yes, std::move(certificate), Int(0));
    }
    static Verdict no(std::vector<SemifieldElement> counterexample) {
        return Verdict(Kind::no, std::move(counterexample), Int(0));
    }
    static Verdict unknown(Int bound) { return Verdict(Kind::unknown, {}, std::move(bound)); }

    Kind kind() const { return kind_; }
    bool is_yes() const { return kind_ == Kind::yes; }
    bool is_no() const { return kind_ == Kind::no; }
    bool is_unknown() const { return kind_ == Kind::unknown; }

    // Certificate for yes, counterexample for no; empty for unknown.
    const std::vector<SemifieldElement>& witness() const { return witness_; }
    const Int& bound() const { return bound_; }

private:
    Verdict(Kind kind, std::vector<SemifieldElement> witness, Int bound)
        : kind_(kind), witness_(std::move(witness)), bound_(std::move(bound)) {}

    Kind kind_;
    std::vector<SemifieldElement> witness_;
    Int bound_;
};

} // namespace tropext
