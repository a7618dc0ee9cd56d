// Copyright 2026 The symdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstring>
#include <fstream>
#include <stdexcept>

#include "symdec/hld.hpp"

namespace symdec {

// Dataset container, little-endian throughout:
//   offset  size  field
//   0       8     magic "SYMDECD1"
//   8       4     container version (1)
//   12      4     lattice size L
//   16      8     training error probability (IEEE double bits)
//   24      1     underlying decoder (0 mwpm, 1 trivial)
//   25      1     symmetry mode (0 none, 1 center, 2 align)
//   26      6     reserved, zero
//   32      8     sample seed
//   40      8     sample count
//   48      -     records: ceil(2 L^2 / 8) syndrome bytes (bit i of the
//                 syndrome is byte i/8, bit i%8) plus one label byte
namespace {

constexpr char kMagic[8] = {'S', 'Y', 'M', 'D', 'E', 'C', 'D', '1'};
constexpr std::uint32_t kDatasetVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
std::uint32_t get_u32(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(p[i]) << (8 * i);
  return v;
}
std::uint64_t get_u64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(p[i]) << (8 * i);
  return v;
}

}  // namespace

void write_dataset(const std::string& path, const DatasetSpec& spec,
                   const SampleSet& set) {
  if (set.size() != spec.count)
    throw std::invalid_argument("sample count does not match the spec");
  if (set.input_dim != 2 * spec.L * spec.L)
    throw std::invalid_argument("sample width does not match the spec");
  std::string header;
  header.append(kMagic, sizeof(kMagic));
  put_u32(header, kDatasetVersion);
  put_u32(header, static_cast<std::uint32_t>(spec.L));
  std::uint64_t p_bits;
  static_assert(sizeof(p_bits) == sizeof(spec.p_train));
  std::memcpy(&p_bits, &spec.p_train, sizeof(p_bits));
  put_u64(header, p_bits);
  header.push_back(static_cast<char>(spec.underlying == Underlying::Mwpm ? 0 : 1));
  header.push_back(static_cast<char>(spec.symmetry == SymmetryMode::None
                                         ? 0
                                         : spec.symmetry == SymmetryMode::Center
                                               ? 1
                                               : 2));
  header.append(6, '\0');
  put_u64(header, spec.seed);
  put_u64(header, spec.count);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open dataset file for writing: " + path);
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  std::size_t stride = set.row_stride();
  for (std::size_t i = 0; i < set.size(); ++i) {
    out.write(reinterpret_cast<const char*>(set.packed.data() + i * stride),
              static_cast<std::streamsize>(stride));
    out.put(static_cast<char>(set.labels[i]));
  }
  if (!out) throw std::runtime_error("failed writing dataset file: " + path);
}

SampleSet read_dataset(const std::string& path, DatasetSpec* spec_out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  unsigned char header[48];
  if (!in.read(reinterpret_cast<char*>(header), sizeof(header)))
    throw std::runtime_error("dataset file is truncated: " + path);
  if (std::memcmp(header, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("not a dataset file: " + path);
  if (get_u32(header + 8) != kDatasetVersion)
    throw std::runtime_error("unsupported dataset version in " + path);
  DatasetSpec spec;
  spec.L = static_cast<int>(get_u32(header + 12));
  if (spec.L < 2 || spec.L > 4096)
    throw std::runtime_error("dataset has an invalid lattice size: " + path);
  std::uint64_t p_bits = get_u64(header + 16);
  std::memcpy(&spec.p_train, &p_bits, sizeof(p_bits));
  switch (header[24]) {
    case 0:
      spec.underlying = Underlying::Mwpm;
      break;
    case 1:
      spec.underlying = Underlying::Trivial;
      break;
    default:
      throw std::runtime_error("dataset has an unknown decoder tag: " + path);
  }
  switch (header[25]) {
    case 0:
      spec.symmetry = SymmetryMode::None;
      break;
    case 1:
      spec.symmetry = SymmetryMode::Center;
      break;
    case 2:
      spec.symmetry = SymmetryMode::Align;
      break;
    default:
      throw std::runtime_error("dataset has an unknown symmetry tag: " + path);
  }
  spec.seed = get_u64(header + 32);
  spec.count = get_u64(header + 40);

  SampleSet set;
  set.input_dim = 2 * spec.L * spec.L;
  set.num_classes = 16;
  std::size_t stride = set.row_stride();
  set.packed.resize(stride * spec.count);
  set.labels.resize(spec.count);
  for (std::uint64_t i = 0; i < spec.count; ++i) {
    if (!in.read(reinterpret_cast<char*>(set.packed.data() + i * stride),
                 static_cast<std::streamsize>(stride)))
      throw std::runtime_error("dataset file is truncated: " + path);
    int label = in.get();
    if (label < 0)
      throw std::runtime_error("dataset file is truncated: " + path);
    if (label >= 16)
      throw std::runtime_error("dataset contains an out-of-range label: " + path);
    set.labels[i] = static_cast<std::uint8_t>(label);
  }
  if (in.peek() != std::char_traits<char>::eof())
    throw std::runtime_error("dataset file has trailing bytes: " + path);
  if (spec_out) *spec_out = spec;
  return set;
}

}  // namespace symdec
