#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

inline std::vector<std::vector<std::string>> read_tsv(const std::string& name) {
    std::ifstream in(std::string(DWLINK_TEST_DATA) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, '\t')) cells.push_back(c);
        rows.push_back(cells);
    }
    return rows;
}

/// "num/den" as an exponent of zeta_275.
inline int fraction_to_exponent(const std::string& f) {
    auto slash = f.find('/');
    int num = std::stoi(f.substr(0, slash)), den = std::stoi(f.substr(slash + 1));
    return (num * (275 / den)) % 275;
}
