#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hm {

struct CheckItem {
    std::string name;
    bool ok = true;
    std::string detail;
};

// Itemized outcome of an axiom or identity check. Failures are data, not
// exceptions.
class Report {
public:
    void add(std::string name, bool ok, std::string detail = {}) {
        items_.push_back({std::move(name), ok, std::move(detail)});
    }
    void merge(const std::string& prefix, const Report& other) {
        for (const auto& it : other.items_) items_.push_back({prefix + it.name, it.ok, it.detail});
    }

    bool passed() const {
        for (const auto& it : items_)
            if (!it.ok) return false;
        return true;
    }
    std::optional<CheckItem> first_failure() const {
        for (const auto& it : items_)
            if (!it.ok) return it;
        return std::nullopt;
    }
    bool has_failure(const std::string& name) const {
        for (const auto& it : items_)
            if (!it.ok && it.name == name) return true;
        return false;
    }
    const CheckItem* find(const std::string& name) const {
        for (const auto& it : items_)
            if (it.name == name) return &it;
        return nullptr;
    }
    const std::vector<CheckItem>& items() const& { return items_; }
    std::vector<CheckItem> items() && { return std::move(items_); }

private:
    std::vector<CheckItem> items_;
};

}  // namespace hm
