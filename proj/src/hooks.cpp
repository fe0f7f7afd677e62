#include "stacksort/hooks.hpp"

#include <algorithm>
#include <stdexcept>

#include "stacksort/descents.hpp"

namespace stacksort {

namespace {

void require_valid(const Permutation& host, Hook h, const char* what) {
    if (!is_valid_hook(host, h)) {
        throw std::invalid_argument(std::string(what) + ": hook (" + std::to_string(h.sw) +
                                    "," + std::to_string(h.ne) + ") is not a hook of the host");
    }
}

// Axis-parallel integer segments. A hook's path is one vertical segment
// (the sw column) plus one horizontal segment (at the ne height).
struct VSeg {
    int x, ylo, yhi;
};
struct HSeg {
    int y, xlo, xhi;
};

VSeg vertical(const Permutation& p, Hook h) { return {h.sw, p.entry(h.sw), p.entry(h.ne)}; }
HSeg horizontal(const Permutation& p, Hook h) { return {p.entry(h.ne), h.sw, h.ne}; }

struct Point {
    int x, y;
    friend bool operator==(const Point&, const Point&) = default;
};

// Intersection of two axis-parallel segments: empty, a point, or a segment.
// `overlap` reports a nondegenerate shared segment, which always conflicts.
struct Meet {
    bool overlap = false;
    std::optional<Point> point;
};

Meet meet(const VSeg& a, const VSeg& b) {
    if (a.x != b.x) return {};
    const int lo = std::max(a.ylo, b.ylo);
    const int hi = std::min(a.yhi, b.yhi);
    if (lo > hi) return {};
    if (lo == hi) return {false, Point{a.x, lo}};
    return {true, std::nullopt};
}

Meet meet(const HSeg& a, const HSeg& b) {
    if (a.y != b.y) return {};
    const int lo = std::max(a.xlo, b.xlo);
    const int hi = std::min(a.xhi, b.xhi);
    if (lo > hi) return {};
    if (lo == hi) return {false, Point{lo, a.y}};
    return {true, std::nullopt};
}

Meet meet(const VSeg& v, const HSeg& h) {
    if (h.xlo <= v.x && v.x <= h.xhi && v.ylo <= h.y && h.y <= v.yhi) {
        return {false, Point{v.x, h.y}};
    }
    return {};
}

// Backtracking enumerator shared by enumerate_vhcs and is_sorted_via_vhc.
// Visits configurations in lexicographic order of ne-position tuples; the
// visitor returns false to stop early.
class VhcSearch {
public:
    explicit VhcSearch(const Permutation& p) : host_(p) {
        for (int d : descent_stats(p).descents) {
            descents_.push_back(d);
            candidates_.push_back(candidate_nes(d));
        }
    }

    void run(const std::function<bool(const std::vector<Hook>&)>& visit) {
        visit_ = &visit;
        chosen_.clear();
        extend(0);
    }

private:
    // Admissible northeast positions for the hook rooted at descent d:
    // j > d whose entry exceeds everything from position d through j-1.
    // That folds in both hook validity and the no-point-above condition,
    // neither of which depends on the other hooks.
    std::vector<int> candidate_nes(int d) const {
        std::vector<int> out;
        int run_max = host_.entry(d);
        for (int j = d + 1; j <= host_.size(); ++j) {
            if (host_.entry(j) > run_max) out.push_back(j);
            run_max = std::max(run_max, host_.entry(j));
        }
        return out;
    }

    bool extend(std::size_t u) {
        if (u == descents_.size()) return (*visit_)(chosen_);
        for (int ne : candidates_[u]) {
            const Hook h{descents_[u], ne};
            bool clash = false;
            for (const Hook& prev : chosen_) {
                if (hooks_conflict(host_, prev, h)) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            chosen_.push_back(h);
            const bool keep_going = extend(u + 1);
            chosen_.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    const Permutation& host_;
    std::vector<int> descents_;
    std::vector<std::vector<int>> candidates_;
    std::vector<Hook> chosen_;
    const std::function<bool(const std::vector<Hook>&)>* visit_ = nullptr;
};

}  // namespace

bool is_valid_hook(const Permutation& host, Hook h) {
    return 1 <= h.sw && h.sw < h.ne && h.ne <= host.size() && host.entry(h.sw) < host.entry(h.ne);
}

std::optional<HookSlice> hook_path_height(const Permutation& host, Hook h, int x) {
    require_valid(host, h, "hook_path_height");
    if (x == h.sw) return HookSlice{host.entry(h.sw), host.entry(h.ne)};
    if (h.sw < x && x <= h.ne) return HookSlice{host.entry(h.ne), host.entry(h.ne)};
    return std::nullopt;
}

bool point_above_hook(const Permutation& host, Hook h, int a) {
    require_valid(host, h, "point_above_hook");
    if (a < 1 || a > host.size()) {
        throw std::invalid_argument("point_above_hook: position out of range");
    }
    return h.sw < a && a < h.ne && host.entry(a) > host.entry(h.ne);
}

bool hooks_conflict(const Permutation& host, Hook a, Hook b) {
    require_valid(host, a, "hooks_conflict");
    require_valid(host, b, "hooks_conflict");
    if (a == b) return true;

    // The single sanctioned shared point, when the hooks chain.
    std::optional<Point> allowed;
    if (a.ne == b.sw) allowed = Point{b.sw, host.entry(b.sw)};
    if (b.ne == a.sw) allowed = Point{a.sw, host.entry(a.sw)};

    const VSeg va = vertical(host, a), vb = vertical(host, b);
    const HSeg ha = horizontal(host, a), hb = horizontal(host, b);
    const Meet meets[4] = {meet(va, vb), meet(va, hb), meet(vb, ha), meet(ha, hb)};

    for (const Meet& m : meets) {
        if (m.overlap) return true;
        if (m.point && m.point != allowed) return true;
    }
    return false;
}

std::vector<ValidHookConfiguration> enumerate_vhcs(const Permutation& p) {
    std::vector<ValidHookConfiguration> out;
    VhcSearch search(p);
    search.run([&](const std::vector<Hook>& hooks) {
        out.push_back(ValidHookConfiguration{p, hooks});
        return true;
    });
    return out;
}

bool is_sorted_via_vhc(const Permutation& p) {
    bool found = false;
    VhcSearch search(p);
    search.run([&](const std::vector<Hook>&) {
        found = true;
        return false;
    });
    return found;
}

void to_json(nlohmann::json& j, const Hook& h) { j = nlohmann::json{{"sw", h.sw}, {"ne", h.ne}}; }

void to_json(nlohmann::json& j, const ValidHookConfiguration& config) {
    j = nlohmann::json{{"permutation", config.host.entries()}, {"hooks", config.hooks}};
}

}  // namespace stacksort
