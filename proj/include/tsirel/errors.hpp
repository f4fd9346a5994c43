#pragma once

#include <stdexcept>
#include <string>

namespace tsirel {

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_member_error : domain_error {
    empty_member_error() : domain_error("sequence contains an empty set") {}
};
struct length_mismatch_error : domain_error {
    length_mismatch_error() : domain_error("sets have different sizes") {}
};
struct invalid_tree_error : domain_error {
    explicit invalid_tree_error(const std::string& what) : domain_error("invalid tree: " + what) {}
};
struct not_s1_tree_error : domain_error {
    not_s1_tree_error() : domain_error("tree is not S_1-branching") {}
};
struct not_disjoint_error : domain_error {
    not_disjoint_error() : domain_error("node sets are not pairwise disjoint") {}
};
struct support_too_large_error : domain_error {
    explicit support_too_large_error(const std::string& what) : domain_error(what) {}
};
struct key_out_of_range_error : domain_error {
    explicit key_out_of_range_error(const std::string& what) : domain_error(what) {}
};
struct not_in_span_error : domain_error {
    explicit not_in_span_error(const std::string& what) : domain_error(what) {}
};
struct not_skipped_error : domain_error {
    not_skipped_error() : domain_error("index set is not L-skipped") {}
};
struct hypothesis_violated_error : domain_error {
    int hypothesis;
    explicit hypothesis_violated_error(int which, const std::string& what)
        : domain_error("hypothesis (" + std::to_string(which) + ") violated: " + what), hypothesis(which) {}
};
struct insufficient_stream_error : domain_error {
    explicit insufficient_stream_error(const std::string& what) : domain_error(what) {}
};
struct infeasible_composition_error : domain_error {
    infeasible_composition_error() : domain_error("no composition: p < N") {}
};
// Raised when an exact build would need more entries (or larger indices) than
// the configured budget; carries the offending scale so reports can explain it.
struct construction_infeasible_error : domain_error {
    explicit construction_infeasible_error(const std::string& what) : domain_error(what) {}
};

} // namespace tsirel
