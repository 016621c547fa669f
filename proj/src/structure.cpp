#include "homoglab/structure.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace homoglab {

int Signature::index_of(const std::string& name) const {
    for (size_t i = 0; i < relations.size(); ++i)
        if (relations[i].name == name) return static_cast<int>(i);
    return -1;
}

Signature make_signature(std::vector<RelationSymbol> symbols) {
    std::sort(symbols.begin(), symbols.end(),
              [](const RelationSymbol& x, const RelationSymbol& y) { return x.name < y.name; });
    for (size_t i = 0; i + 1 < symbols.size(); ++i)
        if (symbols[i].name == symbols[i + 1].name)
            throw std::invalid_argument("duplicate relation name: " + symbols[i].name);
    for (const auto& s : symbols)
        if (s.arity != 1 && s.arity != 2)
            throw std::invalid_argument("relation " + s.name + ": arity must be 1 or 2");
    return Signature{std::move(symbols)};
}

FinStructure::FinStructure(Signature sig, int size) : sig_(std::move(sig)), size_(size) {
    if (size < 0) throw std::invalid_argument("negative universe size");
    tables_.resize(sig_.relations.size());
    bits_.resize(sig_.relations.size());
    for (size_t r = 0; r < sig_.relations.size(); ++r) {
        size_t cells = sig_.relations[r].arity == 1 ? static_cast<size_t>(size)
                                                    : static_cast<size_t>(size) * size;
        bits_[r].assign((cells + 63) / 64, 0);
    }
}

void FinStructure::check_element(int a) const {
    if (a < 0 || a >= size_) throw std::out_of_range("element out of range");
}

void FinStructure::add(int rel, int a) {
    check_element(a);
    if (sig_.arity(rel) != 1) throw std::invalid_argument("arity mismatch");
    size_t idx = static_cast<size_t>(a);
    if (bits_[rel][idx / 64] & (uint64_t{1} << (idx % 64))) return;
    bits_[rel][idx / 64] |= uint64_t{1} << (idx % 64);
    tables_[rel].push_back({a});
    dirty_ = true;
}

void FinStructure::add(int rel, int a, int b) {
    check_element(a);
    check_element(b);
    if (sig_.arity(rel) != 2) throw std::invalid_argument("arity mismatch");
    size_t idx = static_cast<size_t>(a) * size_ + b;
    if (bits_[rel][idx / 64] & (uint64_t{1} << (idx % 64))) return;
    bits_[rel][idx / 64] |= uint64_t{1} << (idx % 64);
    tables_[rel].push_back({a, b});
    dirty_ = true;
}

void FinStructure::add_symmetric(int rel, int a, int b) {
    add(rel, a, b);
    add(rel, b, a);
}

bool FinStructure::holds(int rel, int a) const {
    check_element(a);
    size_t idx = static_cast<size_t>(a);
    return bits_[rel][idx / 64] & (uint64_t{1} << (idx % 64));
}

bool FinStructure::holds(int rel, int a, int b) const {
    check_element(a);
    check_element(b);
    size_t idx = static_cast<size_t>(a) * size_ + b;
    return bits_[rel][idx / 64] & (uint64_t{1} << (idx % 64));
}

const std::vector<std::vector<int>>& FinStructure::tuples(int rel) const {
    if (dirty_) const_cast<FinStructure*>(this)->canonicalize();
    return tables_.at(static_cast<size_t>(rel));
}

void FinStructure::canonicalize() {
    for (auto& t : tables_) std::sort(t.begin(), t.end());
    dirty_ = false;
}

FinStructure FinStructure::induced(const std::vector<int>& elements) const {
    FinStructure out(sig_, static_cast<int>(elements.size()));
    for (int r = 0; r < sig_.count(); ++r) {
        if (sig_.arity(r) == 1) {
            for (size_t i = 0; i < elements.size(); ++i)
                if (holds(r, elements[i])) out.add(r, static_cast<int>(i));
        } else {
            for (size_t i = 0; i < elements.size(); ++i)
                for (size_t j = 0; j < elements.size(); ++j)
                    if (holds(r, elements[i], elements[j]))
                        out.add(r, static_cast<int>(i), static_cast<int>(j));
        }
    }
    out.canonicalize();
    return out;
}

bool operator==(const FinStructure& x, const FinStructure& y) {
    if (x.sig_ != y.sig_ || x.size_ != y.size_) return false;
    FinStructure a = x, b = y;
    a.canonicalize();
    b.canonicalize();
    return a.tables_ == b.tables_;
}

FinStructure structure_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<RelationSymbol> symbols;
    for (const auto& item : j.at("signature"))
        symbols.push_back({item.at("name").get<std::string>(), item.at("arity").get<int>()});
    FinStructure s(make_signature(std::move(symbols)), j.at("size").get<int>());
    const auto& rels = j.at("relations");
    for (auto it = rels.begin(); it != rels.end(); ++it) {
        int r = s.signature().index_of(it.key());
        if (r < 0) throw std::invalid_argument("relation not in signature: " + it.key());
        for (const auto& tup : it.value()) {
            std::vector<int> t = tup.get<std::vector<int>>();
            if (static_cast<int>(t.size()) != s.signature().arity(r))
                throw std::invalid_argument("tuple arity mismatch in " + it.key());
            if (t.size() == 1)
                s.add(r, t[0]);
            else
                s.add(r, t[0], t[1]);
        }
    }
    s.canonicalize();
    return s;
}

std::string structure_to_json(const FinStructure& s) {
    nlohmann::ordered_json j;
    j["signature"] = nlohmann::ordered_json::array();
    for (const auto& r : s.signature().relations)
        j["signature"].push_back({{"name", r.name}, {"arity", r.arity}});
    j["size"] = s.size();
    j["relations"] = nlohmann::ordered_json::object();
    for (int r = 0; r < s.signature().count(); ++r)
        j["relations"][s.signature().relations[static_cast<size_t>(r)].name] = s.tuples(r);
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

FinStructure load_structure(const std::string& path) {
    return structure_from_json(read_text_file(path));
}

void save_structure(const FinStructure& s, const std::string& path) {
    write_text_file(path, structure_to_json(s));
}

}  // namespace homoglab
