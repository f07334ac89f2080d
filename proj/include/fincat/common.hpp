#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fincat {

using Id = std::int32_t;

// Broken input: dangling identifiers, mismatched boundaries, partial tables
// that the caller promised were total. Never used for "the axiom fails".
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A construction refused because its hypothesis does not hold. Carries the
// report that shows why.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& what, std::string report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const std::string& report() const { return report_; }

private:
    std::string report_;
};

enum class Verdict { pass, axiom_failure, structural_error };

struct ValidationReport {
    Verdict verdict = Verdict::pass;
    std::string axiom;
    std::string detail;

    bool ok() const { return verdict == Verdict::pass; }
    explicit operator bool() const { return ok(); }

    static ValidationReport pass() { return {}; }
    static ValidationReport fail(std::string axiom, std::string detail) {
        return {Verdict::axiom_failure, std::move(axiom), std::move(detail)};
    }
    static ValidationReport structural(std::string axiom, std::string detail) {
        return {Verdict::structural_error, std::move(axiom), std::move(detail)};
    }
    std::string describe() const;
};

inline std::uint64_t pair_key(Id a, Id b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

// Partial binary operation on indices.
class PairTable {
public:
    std::optional<Id> get(Id a, Id b) const {
        auto it = map_.find(pair_key(a, b));
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void set(Id a, Id b, Id r) { map_[pair_key(a, b)] = r; }
    bool contains(Id a, Id b) const { return map_.count(pair_key(a, b)) != 0; }
    std::size_t size() const { return map_.size(); }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (const auto& [k, v] : map_)
            fn(static_cast<Id>(k >> 32), static_cast<Id>(k & 0xffffffffu), v);
    }
    // Entries sorted by key, for deterministic output.
    std::vector<std::pair<std::pair<Id, Id>, Id>> sorted_entries() const;

private:
    std::unordered_map<std::uint64_t, Id> map_;
};

class NameIndex {
public:
    Id add(const std::string& name);  // throws StructuralError on duplicates
    std::optional<Id> find(std::string_view name) const;
    Id at(std::string_view name, std::string_view what) const;
    const std::string& name(Id i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Id> index_;
};

// Canonical identifier for a tuple of component names: "(a,b,c)".
std::string tuple_name(const std::vector<std::string>& parts);

inline Id to_id(std::size_t i) { return static_cast<Id>(i); }

}  // namespace fincat
