#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fincat/common.hpp"

namespace fincat {

enum class SearchStatus { found, exhausted, budget };

std::string to_string(SearchStatus s);

struct SearchBudget {
    std::uint64_t max_candidates = 10'000'000;
    unsigned workers = 1;  // >1 partitions on the first variable
};

template <class T>
struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<T> witness;
    std::uint64_t candidates_examined = 0;

    bool found() const { return status == SearchStatus::found; }
};

// Many-sorted finite algebra with partial operations. Boundary maps,
// identities and compositions of every structure level are operations.
struct Presentation {
    struct Op {
        std::string name;
        std::vector<int> arg_sorts;
        int result_sort = 0;
        std::vector<std::pair<std::vector<Id>, Id>> entries;
    };
    std::vector<std::size_t> sort_sizes;
    std::vector<Op> ops;

    int add_op(std::string name, std::vector<int> arg_sorts, int result_sort);
    void add_entry(int op, std::vector<Id> args, Id result) {
        ops[static_cast<std::size_t>(op)].entries.push_back({std::move(args), result});
    }
};

// One map per sort.
using Assignment = std::vector<std::vector<Id>>;

// Enumerates maps source -> target preserving every operation entry of the
// source, in lexicographic order (sorts in order, cells in order, candidate
// values ascending). candidates_examined counts complete maps tested against
// the predicate. Source and target must have the same signature.
SearchOutcome<Assignment> enumerate_homomorphisms(const Presentation& source, const Presentation& target,
                                                  const std::function<bool(const Assignment&)>& predicate,
                                                  const SearchBudget& budget = {});

// Every cell of the hole's boundary class is tried; all solutions returned.
struct SolveOutcome {
    std::vector<Id> solutions;
    std::uint64_t candidates_examined = 0;
    std::size_t count() const { return solutions.size(); }
};

SolveOutcome solve_hole(const std::vector<Id>& candidates, const std::function<bool(Id)>& equation_holds);

}  // namespace fincat
