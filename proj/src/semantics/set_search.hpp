#pragma once

#include <optional>

#include "afsolve/framework.hpp"
#include "node_counter.hpp"

namespace afsolve::detail {

// Constraints for a search for one set e of arguments.
struct SetQuery {
    ArgumentSet must_include;  // seeds, always members of e
    ArgumentSet target;        // e must cover every member (target within range(e))
    ArgumentSet pool;          // e only draws from here
    bool admissible = false;   // otherwise conflict-free suffices
};

// Grows e from the seeds by discharging one obligation at a time: an uncovered
// target element t is discharged by t or one of its attackers, and (admissible
// queries) an unanswered attacker y of e by one of y's attackers. Returns the
// first e found, or nullopt when none exists.
std::optional<ArgumentSet> find_set(const ArgumentationFramework& af, const SetQuery& query, NodeCounter& counter);

}  // namespace afsolve::detail
