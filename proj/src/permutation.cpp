#include "stacksort/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace stacksort {

namespace {

void validate_entries(const std::vector<int>& entries) {
    std::unordered_set<int> seen;
    seen.reserve(entries.size());
    for (int e : entries) {
        if (e < 1) {
            throw std::invalid_argument("permutation entry " + std::to_string(e) +
                                        " is not a positive integer");
        }
        if (!seen.insert(e).second) {
            throw std::invalid_argument("duplicate permutation entry " + std::to_string(e));
        }
    }
}

bool is_separator(char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    validate_entries(entries_);
}

Permutation Permutation::parse(std::string_view text) {
    const bool has_separator = std::any_of(text.begin(), text.end(), is_separator);
    std::vector<int> entries;

    if (has_separator) {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && is_separator(text[i])) ++i;
            if (i == text.size()) break;
            std::size_t j = i;
            while (j < text.size() && !is_separator(text[j])) ++j;
            const std::string_view token = text.substr(i, j - i);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw std::invalid_argument("cannot parse permutation entry '" +
                                            std::string(token) + "'");
            }
            entries.push_back(value);
            i = j;
        }
    } else {
        // Contiguous digit form: one entry per character. Only well-defined
        // when every entry is a single digit; '0' has no valid reading here.
        for (char c : text) {
            if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
                throw std::invalid_argument(std::string("unexpected character '") + c +
                                            "' in permutation");
            }
            if (c == '0') {
                throw std::invalid_argument(
                    "digit-string form reads one entry per digit; use separators "
                    "for multi-digit entries");
            }
            entries.push_back(c - '0');
        }
    }

    if (entries.empty()) {
        throw std::invalid_argument("empty permutation");
    }
    return Permutation(std::move(entries));
}

Permutation Permutation::identity(int n) {
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::iota(entries.begin(), entries.end(), 1);
    return Permutation(std::move(entries));
}

int Permutation::max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

bool Permutation::is_increasing() const {
    return std::is_sorted(entries_.begin(), entries_.end());
}

bool Permutation::is_standardized() const {
    std::vector<int> sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

Permutation Permutation::standardized() const {
    std::vector<int> sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> result(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), entries_[i]);
        result[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation(std::move(result));
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) os << ' ';
        os << entries_[i];
    }
    return os.str();
}

Permutation one_plus(const Permutation& p) {
    if (!p.is_standardized()) {
        throw std::invalid_argument("one_plus requires a standardized permutation");
    }
    std::vector<int> entries;
    entries.reserve(p.entries().size() + 1);
    entries.push_back(1);
    for (int e : p.entries()) entries.push_back(e + 1);
    return Permutation(std::move(entries));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << p.str();
}

}  // namespace stacksort
