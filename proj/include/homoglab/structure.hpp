#pragma once
// Finite relational structures over unary/binary signatures, plus canonical JSON I/O.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homoglab {

struct RelationSymbol {
    std::string name;
    int arity = 2;
    friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
    friend auto operator<=>(const RelationSymbol&, const RelationSymbol&) = default;
};

struct Signature {
    std::vector<RelationSymbol> relations;  // kept sorted by name, names unique

    int index_of(const std::string& name) const;
    int arity(int rel) const { return relations.at(static_cast<size_t>(rel)).arity; }
    int count() const { return static_cast<int>(relations.size()); }
    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature make_signature(std::vector<RelationSymbol> symbols);

// Universe is 0..size-1. Tuples are stored as sorted lists for serialization and
// mirrored into bitsets for O(1) lookup.
class FinStructure {
  public:
    FinStructure() = default;
    FinStructure(Signature sig, int size);

    const Signature& signature() const { return sig_; }
    int size() const { return size_; }

    void add(int rel, int a);
    void add(int rel, int a, int b);
    void add_symmetric(int rel, int a, int b);
    bool holds(int rel, int a) const;
    bool holds(int rel, int a, int b) const;

    // Tuples of one relation, lexicographically sorted, deduplicated.
    const std::vector<std::vector<int>>& tuples(int rel) const;
    void canonicalize();

    FinStructure induced(const std::vector<int>& elements) const;

    friend bool operator==(const FinStructure& x, const FinStructure& y);

  private:
    void check_element(int a) const;

    Signature sig_;
    int size_ = 0;
    std::vector<std::vector<std::vector<int>>> tables_;
    std::vector<std::vector<uint64_t>> bits_;
    bool dirty_ = false;
};

FinStructure structure_from_json(const std::string& text);
std::string structure_to_json(const FinStructure& s);
FinStructure load_structure(const std::string& path);
void save_structure(const FinStructure& s, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace homoglab
