#include "stacksort/stack_sort.hpp"

#include <stdexcept>

namespace stacksort {

void stack_sort_into(const std::vector<int>& input, std::vector<int>& output,
                     std::vector<int>& scratch) {
    output.clear();
    scratch.clear();
    for (int next : input) {
        while (!scratch.empty() && scratch.back() < next) {
            output.push_back(scratch.back());
            scratch.pop_back();
        }
        scratch.push_back(next);
    }
    while (!scratch.empty()) {
        output.push_back(scratch.back());
        scratch.pop_back();
    }
}

Permutation stack_sort(const Permutation& p) {
    std::vector<int> output;
    std::vector<int> scratch;
    output.reserve(p.entries().size());
    stack_sort_into(p.entries(), output, scratch);
    return Permutation(std::move(output));
}

Permutation stack_sort_iter(const Permutation& p, int t) {
    if (t < 0) throw std::invalid_argument("iteration count must be >= 0");
    std::vector<int> current = p.entries();
    std::vector<int> next;
    std::vector<int> scratch;
    for (int i = 0; i < t; ++i) {
        stack_sort_into(current, next, scratch);
        current.swap(next);
    }
    return Permutation(std::move(current));
}

SortTrace trace(const Permutation& p) {
    SortTrace result;
    result.steps.reserve(2 * p.entries().size());
    std::vector<int> stack;
    std::vector<int> output;

    const auto record = [&](SortStep::Action action, int entry) {
        result.steps.push_back(SortStep{action, entry, stack, output});
    };

    for (int next : p.entries()) {
        while (!stack.empty() && stack.back() < next) {
            const int top = stack.back();
            stack.pop_back();
            output.push_back(top);
            record(SortStep::Action::pop, top);
        }
        stack.push_back(next);
        record(SortStep::Action::push, next);
    }
    while (!stack.empty()) {
        const int top = stack.back();
        stack.pop_back();
        output.push_back(top);
        record(SortStep::Action::pop, top);
    }
    return result;
}

}  // namespace stacksort
