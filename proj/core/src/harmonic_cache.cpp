#include <cstdint>
#include <fstream>
#include <vector>

#include "bergman/errors.hpp"
#include "bergman/harmonic.hpp"

namespace bergman {

namespace {

constexpr char kMagic[4] = {'B', 'B', 'H', 'B'};
constexpr std::uint32_t kVersion = 1;

void write_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = (v >> (8 * i)) & 0xff;
    os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t read_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
    return v;
}

void write_bigint(std::ostream& os, const BigInt& x) {
    std::vector<unsigned char> bytes;
    BigInt mag = abs(x);
    export_bits(mag, std::back_inserter(bytes), 8);
    os.put(x < 0 ? 1 : 0);
    write_u64(os, bytes.size());
    if (!bytes.empty())
        os.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
}

BigInt read_bigint(std::istream& is) {
    int sign = is.get();
    std::uint64_t len = read_u64(is);
    std::vector<unsigned char> bytes(len);
    if (len) is.read(reinterpret_cast<char*>(bytes.data()), std::streamsize(len));
    BigInt mag = 0;
    if (!bytes.empty()) import_bits(mag, bytes.begin(), bytes.end(), 8);
    return sign ? -mag : mag;
}

void write_rational(std::ostream& os, const Rational& r) {
    write_bigint(os, numerator(r));
    write_bigint(os, denominator(r));
}

Rational read_rational(std::istream& is) {
    BigInt num = read_bigint(is);
    BigInt den = read_bigint(is);
    return Rational(num, den);
}

} // namespace

void save_harmonic_basis(const HarmonicBasis& basis, const std::filesystem::path& file) {
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("save_harmonic_basis: cannot open " + file.string());
    os.write(kMagic, 4);
    write_u64(os, kVersion);
    write_u64(os, std::uint64_t(basis.n));
    write_u64(os, std::uint64_t(basis.p));
    write_u64(os, std::uint64_t(basis.q));
    write_u64(os, std::uint64_t(basis.dim()));
    write_u64(os, basis.cols());
    for (const auto& row : basis.coeffs)
        for (const Rational& x : row) write_rational(os, x);
    for (const Rational& x : basis.sq_norms) write_rational(os, x);
    if (!os) throw std::runtime_error("save_harmonic_basis: write failed");
}

HarmonicBasis load_harmonic_basis(const std::filesystem::path& file) {
    std::ifstream is(file, std::ios::binary);
    if (!is) throw std::runtime_error("load_harmonic_basis: cannot open " + file.string());
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != std::string(kMagic, 4))
        throw std::runtime_error("load_harmonic_basis: bad magic");
    if (read_u64(is) != kVersion)
        throw std::runtime_error("load_harmonic_basis: unsupported version");
    int n = int(read_u64(is)), p = int(read_u64(is)), q = int(read_u64(is));
    std::uint64_t dim = read_u64(is), ncols = read_u64(is);

    // Rebuild the deterministic column layout, then restore the payload.
    HarmonicBasis basis;
    basis.n = n;
    basis.p = p;
    basis.q = q;
    basis.alphas = enumerate_multi_indices(n, p);
    basis.betas = enumerate_multi_indices(n, q);
    const size_t nb = basis.betas.size();
    basis.col_alpha.resize(basis.alphas.size() * nb);
    basis.col_beta.resize(basis.alphas.size() * nb);
    for (size_t ia = 0; ia < basis.alphas.size(); ++ia)
        for (size_t ib = 0; ib < nb; ++ib) {
            basis.col_alpha[ia * nb + ib] = int(ia);
            basis.col_beta[ia * nb + ib] = int(ib);
        }
    if (ncols != basis.cols()) throw std::runtime_error("load_harmonic_basis: column count mismatch");
    basis.coeffs.assign(dim, std::vector<Rational>(ncols));
    for (auto& row : basis.coeffs)
        for (auto& x : row) x = read_rational(is);
    basis.sq_norms.resize(dim);
    for (auto& x : basis.sq_norms) x = read_rational(is);
    if (!is) throw std::runtime_error("load_harmonic_basis: truncated file");
    return basis;
}

BasisStore::BasisStore(int n, std::optional<std::filesystem::path> cache_dir)
    : n_(n), cache_dir_(std::move(cache_dir)) {
    if (cache_dir_) std::filesystem::create_directories(*cache_dir_);
}

const HarmonicBasis& BasisStore::exact(int p, int q) {
    auto key = std::make_pair(p, q);
    auto it = exact_.find(key);
    if (it != exact_.end()) return it->second;

    if (cache_dir_) {
        auto file = *cache_dir_ / ("hb_n" + std::to_string(n_) + "_p" + std::to_string(p) +
                                   "_q" + std::to_string(q) + ".bin");
        if (std::filesystem::exists(file)) {
            try {
                return exact_.emplace(key, load_harmonic_basis(file)).first->second;
            } catch (const std::exception&) {
                // stale or corrupt cache entry; rebuild below
            }
        }
        HarmonicBasis basis = build_harmonic_basis(n_, p, q);
        save_harmonic_basis(basis, file);
        return exact_.emplace(key, std::move(basis)).first->second;
    }
    return exact_.emplace(key, build_harmonic_basis(n_, p, q)).first->second;
}

const CompiledHarmonicBasis& BasisStore::compiled(int p, int q) {
    auto key = std::make_pair(p, q);
    auto it = compiled_.find(key);
    if (it != compiled_.end()) return *it->second;
    auto ptr = std::make_unique<CompiledHarmonicBasis>(exact(p, q));
    return *compiled_.emplace(key, std::move(ptr)).first->second;
}

} // namespace bergman
