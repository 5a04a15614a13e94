#include "vseval/feature_cache.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "vseval/dataset.hpp"
#include "vseval/errors.hpp"

namespace fs = std::filesystem;

namespace vseval {

namespace {

constexpr char kMagic[4] = {'V', 'S', 'F', 'C'};
constexpr std::uint32_t kVersion = 1;

class Fnv1a64 {
 public:
  void update(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const std::uint8_t*>(data);
    for (std::size_t i = 0; i < size; ++i) {
      hash_ ^= bytes[i];
      hash_ *= 0x100000001b3ULL;
    }
  }
  void update_u64(std::uint64_t value) {
    std::uint8_t buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<std::uint8_t>(value >> (8 * i));
    update(buf, sizeof(buf));
  }
  std::uint64_t digest() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

void put_u32(std::string& out, std::uint32_t value) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>(value >> (8 * i)));
}

void put_u64(std::string& out, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>(value >> (8 * i)));
}

void put_f64(std::string& out, double value) {
  put_u64(out, std::bit_cast<std::uint64_t>(value));
}

class Reader {
 public:
  Reader(const std::uint8_t* data, std::size_t size, std::string path)
      : data_(data), size_(size), path_(std::move(path)) {}

  std::uint32_t read_u32() {
    need(4);
    std::uint32_t value = 0;
    for (int i = 0; i < 4; ++i) value |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return value;
  }
  std::uint64_t read_u64() {
    need(8);
    std::uint64_t value = 0;
    for (int i = 0; i < 8; ++i) value |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return value;
  }
  double read_f64() { return std::bit_cast<double>(read_u64()); }
  void read_bytes(void* dst, std::size_t n) {
    need(n);
    std::memcpy(dst, data_ + pos_, n);
    pos_ += n;
  }
  bool exhausted() const { return pos_ == size_; }

 private:
  void need(std::size_t n) {
    if (pos_ + n > size_) {
      throw EvalError(ErrorCode::IoFailure, "truncated feature cache: " + path_);
    }
  }
  const std::uint8_t* data_;
  std::size_t size_;
  std::size_t pos_ = 0;
  std::string path_;
};

}  // namespace

std::uint64_t directory_fingerprint(const fs::path& dir) {
  Fnv1a64 hash;
  for (const NamedFrame& frame : enumerate_summary_frames(dir)) {
    std::ifstream in(frame.path, std::ios::binary);
    if (!in) {
      throw EvalError(ErrorCode::IoFailure, "cannot open " + frame.path.string());
    }
    const std::string name = frame.path.filename().string();
    hash.update(name.data(), name.size());
    hash.update("\0", 1);
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                          std::istreambuf_iterator<char>());
    hash.update_u64(bytes.size());
    hash.update(bytes.data(), bytes.size());
  }
  return hash.digest();
}

void write_feature_cache(const fs::path& path, const FeatureCache& cache) {
  std::string blob;
  blob.reserve(24 + cache.records.size() * (8 + 8 * (kColorBins + kTextureValues)));
  blob.append(kMagic, sizeof(kMagic));
  put_u32(blob, kVersion);
  put_u64(blob, cache.fingerprint);
  put_u32(blob, static_cast<std::uint32_t>(cache.records.size()));
  for (const FeatureRecord& record : cache.records) {
    put_u64(blob, record.frame_id);
    for (double value : record.color.bins) put_f64(blob, value);
    for (double value : record.texture.values) put_f64(blob, value);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(blob.data(), static_cast<std::streamsize>(blob.size()))) {
    throw EvalError(ErrorCode::IoFailure, "cannot write feature cache " + path.string());
  }
}

FeatureCache read_feature_cache(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw EvalError(ErrorCode::IoFailure, "cannot open feature cache " + path.string());
  }
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  Reader reader(bytes.data(), bytes.size(), path.string());

  char magic[4];
  reader.read_bytes(magic, sizeof(magic));
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw EvalError(ErrorCode::IoFailure, "not a feature cache: " + path.string());
  }
  const std::uint32_t version = reader.read_u32();
  if (version != kVersion) {
    throw EvalError(ErrorCode::IoFailure,
                    "unsupported feature cache version " + std::to_string(version));
  }

  FeatureCache cache;
  cache.fingerprint = reader.read_u64();
  const std::uint32_t count = reader.read_u32();
  cache.records.resize(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    FeatureRecord& record = cache.records[i];
    record.frame_id = reader.read_u64();
    for (double& value : record.color.bins) value = reader.read_f64();
    for (double& value : record.texture.values) value = reader.read_f64();
  }
  if (!reader.exhausted()) {
    throw EvalError(ErrorCode::IoFailure, "trailing bytes in feature cache " + path.string());
  }
  return cache;
}

}  // namespace vseval
