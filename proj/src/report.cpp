#include "twistforge/report.hpp"

namespace twistforge {

bool Report::passed() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

size_t Report::failure_count() const {
    size_t n = 0;
    for (const auto& it : items)
        if (!it.pass) ++n;
    return n;
}

void Report::add(std::string grid, bool pass, std::string detail) {
    items.push_back({std::move(grid), pass, std::move(detail)});
}

void Report::merge(const Report& other) {
    for (const auto& it : other.items)
        items.push_back({other.check + " " + it.grid, it.pass, it.detail});
    for (const auto& [k, v] : other.params) params.emplace(k, v);
}

void Report::print_text(std::ostream& os) const {
    std::string label;
    for (const auto& [k, v] : params) label += " " + k + "=" + v;
    os << "check " << check << label << "\n";
    for (const auto& it : items) {
        os << (it.pass ? "  [PASS] " : "  [FAIL] ") << it.grid;
        if (!it.detail.empty()) os << "  " << it.detail;
        os << "\n";
    }
    os << "  " << (items.size() - failure_count()) << "/" << items.size() << " passed\n";
}

}  // namespace twistforge
