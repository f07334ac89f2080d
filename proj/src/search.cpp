#include "fincat/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

namespace fincat {

std::string to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::budget: return "budget";
    }
    return "?";
}

int Presentation::add_op(std::string name, std::vector<int> arg_sorts, int result_sort) {
    ops.push_back({std::move(name), std::move(arg_sorts), result_sort, {}});
    return static_cast<int>(ops.size()) - 1;
}

namespace {

std::uint64_t encode(const std::vector<Id>& args) {
    std::uint64_t k = args.size();
    for (Id a : args) k = (k << 20) ^ static_cast<std::uint64_t>(a + 1);
    return k;
}

struct Entry {
    int op;
    std::vector<int> arg_vars;
    int result_var;
};

class Engine {
public:
    Engine(const Presentation& s, const Presentation& t) : src_(s), tgt_(t) {
        if (s.ops.size() != t.ops.size() || s.sort_sizes.size() != t.sort_sizes.size())
            throw StructuralError("source and target presentations have different signatures");
        for (std::size_t i = 0; i < s.ops.size(); ++i)
            if (s.ops[i].arg_sorts != t.ops[i].arg_sorts || s.ops[i].result_sort != t.ops[i].result_sort)
                throw StructuralError("operation '" + s.ops[i].name + "' differs between presentations");
        for (std::size_t cell_sort = 0; cell_sort < s.sort_sizes.size(); ++cell_sort) {
            offset_.push_back(static_cast<int>(nvars_));
            nvars_ += s.sort_sizes[cell_sort];
            for (std::size_t c = 0; c < s.sort_sizes[cell_sort]; ++c) sort_of_.push_back(static_cast<int>(cell_sort));
        }
        target_table_.resize(t.ops.size());
        unary_inverse_.resize(t.ops.size());
        for (std::size_t o = 0; o < t.ops.size(); ++o) {
            for (const auto& [args, r] : t.ops[o].entries) target_table_[o][encode(args)] = r;
            if (t.ops[o].arg_sorts.size() == 1) {
                unary_inverse_[o].resize(t.sort_sizes[static_cast<std::size_t>(t.ops[o].result_sort)]);
                for (const auto& [args, r] : t.ops[o].entries) unary_inverse_[o][r].push_back(args[0]);
                for (auto& v : unary_inverse_[o]) std::sort(v.begin(), v.end());
            }
        }
        forcing_.resize(nvars_);
        narrowing_.resize(nvars_);
        checks_.resize(nvars_);
        for (std::size_t o = 0; o < s.ops.size(); ++o)
            for (const auto& [args, r] : s.ops[o].entries) {
                Entry e{static_cast<int>(o), {}, var(s.ops[o].result_sort, r)};
                int maxarg = -1;
                for (std::size_t i = 0; i < args.size(); ++i) {
                    e.arg_vars.push_back(var(s.ops[o].arg_sorts[i], args[i]));
                    maxarg = std::max(maxarg, e.arg_vars.back());
                }
                int trigger = std::max(maxarg, e.result_var);
                if (e.result_var > maxarg) {
                    forcing_[static_cast<std::size_t>(e.result_var)].push_back(e);
                } else {
                    if (args.size() == 1 && e.arg_vars[0] == trigger)
                        narrowing_[static_cast<std::size_t>(trigger)].push_back(e);
                    checks_[static_cast<std::size_t>(trigger)].push_back(std::move(e));
                }
            }
    }

    std::size_t variable_count() const { return nvars_; }

    // Candidate values for variable v given the assignment so far.
    std::vector<Id> candidates(std::size_t v) const {
        for (const auto& e : forcing_[v]) {
            auto r = lookup(e);
            if (!r) return {};
            return {*r};
        }
        const std::vector<Id>* best = nullptr;
        for (const auto& e : narrowing_[v]) {
            Id want = value_[static_cast<std::size_t>(e.result_var)];
            const auto& inv = unary_inverse_[static_cast<std::size_t>(e.op)];
            static const std::vector<Id> empty;
            const auto& lst = static_cast<std::size_t>(want) < inv.size() ? inv[want] : empty;
            if (!best || lst.size() < best->size()) best = &lst;
        }
        if (best) return *best;
        std::vector<Id> all(tgt_.sort_sizes[static_cast<std::size_t>(sort_of_[v])]);
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = to_id(i);
        return all;
    }

    bool consistent(std::size_t v) const {
        for (const auto& e : forcing_[v]) {
            auto r = lookup(e);
            if (!r || *r != value_[v]) return false;
        }
        for (const auto& e : checks_[v]) {
            auto r = lookup(e);
            if (!r || *r != value_[static_cast<std::size_t>(e.result_var)]) return false;
        }
        return true;
    }

    Assignment current() const {
        Assignment a(src_.sort_sizes.size());
        for (std::size_t v = 0; v < nvars_; ++v) a[static_cast<std::size_t>(sort_of_[v])].push_back(value_[v]);
        return a;
    }

    // Depth-first from variable v. Returns true to stop.
    template <class Visit>
    bool run(std::size_t v, Visit& visit) {
        if (v == nvars_) return visit(current());
        for (Id c : candidates(v)) {
            value_[v] = c;
            if (!consistent(v)) continue;
            if (run(v + 1, visit)) return true;
        }
        return false;
    }

    void reset() { value_.assign(nvars_, -1); }
    void set(std::size_t v, Id c) { value_[v] = c; }

private:
    int var(int sort, Id cell) const { return offset_[static_cast<std::size_t>(sort)] + cell; }
    std::optional<Id> lookup(const Entry& e) const {
        std::vector<Id> args;
        args.reserve(e.arg_vars.size());
        for (int a : e.arg_vars) args.push_back(value_[static_cast<std::size_t>(a)]);
        const auto& tab = target_table_[static_cast<std::size_t>(e.op)];
        auto it = tab.find(encode(args));
        if (it == tab.end()) return std::nullopt;
        return it->second;
    }

    const Presentation& src_;
    const Presentation& tgt_;
    std::size_t nvars_ = 0;
    std::vector<int> offset_, sort_of_;
    std::vector<std::unordered_map<std::uint64_t, Id>> target_table_;
    std::vector<std::vector<std::vector<Id>>> unary_inverse_;
    std::vector<std::vector<Entry>> forcing_, narrowing_, checks_;
    std::vector<Id> value_;
};

struct Partial {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<Assignment> witness;
    std::uint64_t examined = 0;
};

Partial search_from(Engine& eng, std::size_t start, const std::function<bool(const Assignment&)>& pred,
                    std::uint64_t cap) {
    Partial out;
    auto visit = [&](const Assignment& a) {
        if (out.examined == cap) {
            out.status = SearchStatus::budget;
            return true;
        }
        ++out.examined;
        if (pred(a)) {
            out.status = SearchStatus::found;
            out.witness = a;
            return true;
        }
        return false;
    };
    eng.run(start, visit);
    return out;
}

}  // namespace

SearchOutcome<Assignment> enumerate_homomorphisms(const Presentation& source, const Presentation& target,
                                                  const std::function<bool(const Assignment&)>& predicate,
                                                  const SearchBudget& budget) {
    Engine base(source, target);
    base.reset();
    SearchOutcome<Assignment> out;
    const std::uint64_t cap = budget.max_candidates;

    if (budget.workers <= 1 || base.variable_count() == 0) {
        auto p = search_from(base, 0, predicate, cap);
        out.status = p.status;
        out.witness = std::move(p.witness);
        out.candidates_examined = p.examined;
        return out;
    }

    // Partition on the first variable. Each part runs to its own first hit;
    // parts are then merged in order, which reproduces the sequential result.
    const auto first = base.candidates(0);
    std::vector<Partial> parts(first.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        Engine eng(source, target);
        for (std::size_t i = next++; i < first.size(); i = next++) {
            eng.reset();
            eng.set(0, first[i]);
            if (!eng.consistent(0)) {
                parts[i] = Partial{};
                continue;
            }
            parts[i] = search_from(eng, 1, predicate, cap);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < budget.workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::uint64_t total = 0;
    for (auto& p : parts) {
        if (p.status == SearchStatus::budget || total + p.examined > cap ||
            (total == cap && p.examined > 0)) {
            out.status = SearchStatus::budget;
            out.candidates_examined = cap;
            return out;
        }
        total += p.examined;
        if (p.status == SearchStatus::found) {
            out.status = SearchStatus::found;
            out.witness = std::move(p.witness);
            out.candidates_examined = total;
            return out;
        }
    }
    out.status = SearchStatus::exhausted;
    out.candidates_examined = total;
    return out;
}

SolveOutcome solve_hole(const std::vector<Id>& candidates, const std::function<bool(Id)>& equation_holds) {
    SolveOutcome out;
    for (Id c : candidates) {
        ++out.candidates_examined;
        if (equation_holds(c)) out.solutions.push_back(c);
    }
    return out;
}

}  // namespace fincat
