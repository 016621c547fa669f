#include "homoglab/atomic_type.hpp"

#include <sstream>

namespace homoglab {

namespace {

void set_bit(std::vector<uint64_t>& bits, size_t i, bool v) {
    if (bits.size() <= i / 64) bits.resize(i / 64 + 1, 0);
    if (v) bits[i / 64] |= uint64_t{1} << (i % 64);
}

bool get_bit(const std::vector<uint64_t>& bits, size_t i) {
    if (bits.size() <= i / 64) return false;
    return bits[i / 64] & (uint64_t{1} << (i % 64));
}

// Walks the literal enumeration shared by atp(), transpose and printing.
template <typename F>
void for_each_literal(const Signature& sig, int total_slots, F&& visit) {
    size_t idx = 0;
    for (int s = 0; s < total_slots; ++s)
        for (int t = s + 1; t < total_slots; ++t) visit(idx++, -1, s, t);
    for (int r = 0; r < sig.count(); ++r) {
        if (sig.arity(r) == 1) {
            for (int s = 0; s < total_slots; ++s) visit(idx++, r, s, -1);
        } else {
            for (int s = 0; s < total_slots; ++s)
                for (int t = 0; t < total_slots; ++t) visit(idx++, r, s, t);
        }
    }
}

}  // namespace

AtomicType atp(const FinStructure& s, const std::vector<int>& free_tuple,
               const std::vector<int>& params) {
    AtomicType out;
    out.width = static_cast<int>(free_tuple.size());
    out.param_count = static_cast<int>(params.size());
    out.params = params;
    std::vector<int> slot_values = free_tuple;
    slot_values.insert(slot_values.end(), params.begin(), params.end());
    int total = static_cast<int>(slot_values.size());
    for_each_literal(s.signature(), total, [&](size_t idx, int rel, int a, int b) {
        bool v;
        if (rel < 0)
            v = slot_values[static_cast<size_t>(a)] == slot_values[static_cast<size_t>(b)];
        else if (b < 0)
            v = s.holds(rel, slot_values[static_cast<size_t>(a)]);
        else
            v = s.holds(rel, slot_values[static_cast<size_t>(a)], slot_values[static_cast<size_t>(b)]);
        set_bit(out.literals, idx, v);
    });
    return out;
}

AtomicType transpose_pair_type(const Signature& sig, const AtomicType& t) {
    if (t.width != 2 || t.param_count != 0)
        throw std::invalid_argument("transpose_pair_type expects a parameter-free 2-type");
    AtomicType out = t;
    auto swap_slot = [](int s) { return s == 0 ? 1 : (s == 1 ? 0 : s); };
    std::vector<uint64_t> src = t.literals;
    // Re-evaluate every literal at swapped slots; equality of slot pair (0,1) is symmetric.
    std::vector<std::pair<int, std::pair<int, int>>> layout;
    for_each_literal(sig, 2, [&](size_t, int rel, int a, int b) { layout.push_back({rel, {a, b}}); });
    auto index_of = [&](int rel, int a, int b) -> size_t {
        for (size_t i = 0; i < layout.size(); ++i)
            if (layout[i].first == rel && layout[i].second.first == a && layout[i].second.second == b)
                return i;
        throw std::logic_error("literal not found");
    };
    for (size_t i = 0; i < layout.size(); ++i) {
        auto [rel, slots] = layout[i];
        int a = swap_slot(slots.first);
        int b = slots.second < 0 ? -1 : swap_slot(slots.second);
        size_t j = rel < 0 ? index_of(rel, std::min(a, b), std::max(a, b)) : index_of(rel, a, b);
        set_bit(out.literals, i, get_bit(src, j));
    }
    return out;
}

std::string atomic_type_to_string(const Signature& sig, const AtomicType& t) {
    auto slot_name = [&](int s) {
        std::ostringstream os;
        if (s < t.width)
            os << "x" << s;
        else
            os << "p" << (s - t.width);
        return os.str();
    };
    std::ostringstream os;
    bool first = true;
    for_each_literal(sig, t.width + t.param_count, [&](size_t idx, int rel, int a, int b) {
        if (!first) os << " & ";
        first = false;
        bool v = get_bit(t.literals, idx);
        if (rel < 0) {
            os << slot_name(a) << (v ? "==" : "!=") << slot_name(b);
        } else {
            if (!v) os << "!";
            os << sig.relations[static_cast<size_t>(rel)].name << "(" << slot_name(a);
            if (b >= 0) os << "," << slot_name(b);
            os << ")";
        }
    });
    return os.str();
}

}  // namespace homoglab
