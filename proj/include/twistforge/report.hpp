#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace twistforge {

struct CheckItem {
    std::string grid;    // e.g. "(m,n,k)=(1,1,1)" or "generator H_1"
    bool pass = true;
    std::string detail;  // first coefficient diff or explanatory note
};

/// Verification outcome for one named check over a grid of instances.
/// Failures are data, not errors; callers inspect passed().
struct Report {
    std::string check;
    std::map<std::string, std::string> params;  // N, D, ring, conventions...
    std::vector<CheckItem> items;

    bool passed() const;
    size_t failure_count() const;
    void add(std::string grid, bool pass, std::string detail = "");
    void merge(const Report& other);  // appends other's items, prefixed by its name
    void print_text(std::ostream& os) const;
};

}  // namespace twistforge
