#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace segmatch::embedding {

/// Fixed-dimension real vector. All entries are finite and dim >= 1;
/// violations are rejected at construction.
class Vector {
public:
    explicit Vector(std::vector<double> values);

    std::size_t dim() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    std::span<const double> span() const { return values_; }

    double l2_norm() const;

    bool operator==(const Vector&) const = default;

private:
    std::vector<double> values_;
};

/// dot(a, b) / (|a| * |b|), clamped to [-1, 1]. Both vectors must share dim
/// and be nonzero.
double cosine_similarity(const Vector& a, const Vector& b);

/// (1 + cosine) / 2, mapping [-1, 1] onto [0, 1]. Monotone in cosine, so
/// rankings are unchanged; this is the score surfaced in ranked lists.
double normalized_score(const Vector& a, const Vector& b);

/// Column means of a T x D token-embedding matrix (T >= 1, rows uniform).
Vector mean_pool(const std::vector<std::vector<double>>& token_embeddings);

/// Immutable id -> vector map with uniform dimensionality. Iteration order is
/// insertion order. `seed` records the provider seed when one applies, else 0.
class EmbeddingStore {
public:
    explicit EmbeddingStore(std::size_t dim, std::uint64_t seed = 0);

    void insert(std::string id, Vector v);

    const Vector* find(std::string_view id) const;
    /// Throws ValidationError naming the id when absent.
    const Vector& at(std::string_view id) const;
    bool contains(std::string_view id) const { return find(id) != nullptr; }

    std::size_t dim() const { return dim_; }
    std::uint64_t seed() const { return seed_; }
    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const Vector& vector_at_index(std::size_t i) const { return vectors_[i]; }

    bool operator==(const EmbeddingStore& other) const;

private:
    std::size_t dim_;
    std::uint64_t seed_;
    std::vector<std::string> ids_;
    std::vector<Vector> vectors_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct TextItem {
    std::string id;
    std::string text;
};

/// Seam to the external encoder. Implementations must return one vector per
/// input, in input order, all with the same dimension, and must be
/// deterministic for identical inputs under one configuration.
class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;

    /// Embeds one batch. Must be safe to call from multiple threads.
    virtual std::vector<Vector> embed_batch(const std::vector<TextItem>& items) = 0;

    virtual std::string name() const = 0;
};

struct EmbedOptions {
    std::size_t batch_size = 32;
    std::size_t concurrency = 4; // bounded concurrent batches
    std::uint64_t store_seed = 0;
};

/// Runs the provider over the corpus in batches and collects the vectors
/// into a store. Output order follows input order regardless of batch
/// completion order. Texts must be non-empty.
EmbeddingStore embed_corpus(EmbeddingProvider& provider, const std::vector<TextItem>& items,
                            const EmbedOptions& options = {});

// Binary store format: header {magic "EMBS", version u32, dim u32,
// count u64, seed u64}, then per entry {id: u32 length + bytes,
// dim f64 little-endian}, trailing crc32 of all preceding bytes.

void save_store(const EmbeddingStore& store, const std::filesystem::path& path);
EmbeddingStore load_store(const std::filesystem::path& path);

} // namespace segmatch::embedding
