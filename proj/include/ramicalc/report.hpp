#pragma once

#include <string>
#include <vector>

namespace ramicalc {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<CheckItem> checks;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back(CheckItem{std::move(name), pass, std::move(detail)});
    }
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace ramicalc
