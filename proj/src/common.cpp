#include "fincat/common.hpp"

#include <algorithm>

namespace fincat {

std::string ValidationReport::describe() const {
    switch (verdict) {
    case Verdict::pass:
        return "pass";
    case Verdict::axiom_failure:
        return axiom + " failure at " + detail;
    case Verdict::structural_error:
        return "structural error (" + axiom + "): " + detail;
    }
    return "?";
}

std::vector<std::pair<std::pair<Id, Id>, Id>> PairTable::sorted_entries() const {
    std::vector<std::pair<std::pair<Id, Id>, Id>> out;
    out.reserve(map_.size());
    for_each([&](Id a, Id b, Id r) { out.push_back({{a, b}, r}); });
    std::sort(out.begin(), out.end());
    return out;
}

Id NameIndex::add(const std::string& name) {
    if (index_.count(name)) throw StructuralError("duplicate identifier '" + name + "'");
    Id id = to_id(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
}

std::optional<Id> NameIndex::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Id NameIndex::at(std::string_view name, std::string_view what) const {
    auto id = find(name);
    if (!id) throw StructuralError("unknown " + std::string(what) + " '" + std::string(name) + "'");
    return *id;
}

std::string tuple_name(const std::vector<std::string>& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    out += ')';
    return out;
}

}  // namespace fincat
