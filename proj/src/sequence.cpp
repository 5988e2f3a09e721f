#include "nw/sequence.hpp"

#include <fstream>
#include <sstream>

namespace nw {

int paperfolding_at(std::int64_t k) noexcept {
    while (k & 1) {
        if (k == -1) return 1;
        k = (k - 1) / 2;  // lambda_{2m+1} = lambda_m, exact for odd k
    }
    std::int64_t r = ((k % 4) + 4) % 4;
    return r == 0 ? 1 : -1;
}

std::int64_t level_paperfolding_at(int s, std::int64_t k) {
    if (s < 1) throw std::invalid_argument("level_paperfolding_at: s must be >= 1");
    if (k < 0) throw std::out_of_range("level_paperfolding_at: k < 0 is undefined");
    while (k & 1) k = (k - 1) / 2;  // u_{2m+1} = u_m
    std::int64_t j = (k / 2) % (2 * s);
    // inserted block 1,-1,2,-2,...,s,-s
    std::int64_t v = j / 2 + 1;
    return (j % 2 == 0) ? v : -v;
}

std::vector<std::int64_t> interleave_fold(std::pair<std::int64_t, std::int64_t> sigma,
                                          std::span<const std::int64_t> v) {
    std::vector<std::int64_t> out;
    out.reserve(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(i % 2 == 0 ? sigma.first : sigma.second);
        out.push_back(v[i]);
    }
    return out;
}

struct BiSequence::Impl {
    virtual ~Impl() = default;
    virtual std::int64_t at(std::int64_t k) const = 0;
    virtual std::int64_t lo() const noexcept = 0;
    virtual std::int64_t hi() const noexcept = 0;
    virtual std::string describe() const = 0;
};

namespace {

struct PaperfoldingImpl final : BiSequence::Impl {
    std::int64_t at(std::int64_t k) const override { return paperfolding_at(k); }
    std::int64_t lo() const noexcept override { return BiSequence::kMinIndex; }
    std::int64_t hi() const noexcept override { return BiSequence::kMaxIndex; }
    std::string describe() const override { return "paperfolding"; }
};

struct LevelImpl final : BiSequence::Impl {
    explicit LevelImpl(int s) : s_(s) {
        if (s < 1) throw std::invalid_argument("BiSequence::level: s must be >= 1");
    }
    std::int64_t at(std::int64_t k) const override { return level_paperfolding_at(s_, k); }
    std::int64_t lo() const noexcept override { return 0; }
    std::int64_t hi() const noexcept override { return BiSequence::kMaxIndex; }
    std::string describe() const override { return "level:" + std::to_string(s_); }
    int s_;
};

struct StarImpl final : BiSequence::Impl {
    StarImpl(BiSequence inner, bool twice) : inner_(std::move(inner)), twice_(twice) {}
    std::int64_t at(std::int64_t k) const override {
        if (!twice_) return inner_.at(k) + inner_.at(k + 1);
        return inner_.at(k) + 2 * inner_.at(k + 1) + inner_.at(k + 2);
    }
    std::int64_t lo() const noexcept override { return inner_.domain_min(); }
    std::int64_t hi() const noexcept override {
        std::int64_t h = inner_.domain_max();
        return h - (twice_ ? 2 : 1);
    }
    std::string describe() const override {
        return (twice_ ? "doublestar(" : "star(") + inner_.describe() + ")";
    }
    BiSequence inner_;
    bool twice_;
};

struct FileImpl final : BiSequence::Impl {
    FileImpl(std::int64_t base, std::vector<std::int64_t> values, std::string name)
        : base_(base), values_(std::move(values)), name_(std::move(name)) {}
    std::int64_t at(std::int64_t k) const override {
        if (k < base_ || k >= base_ + static_cast<std::int64_t>(values_.size()))
            throw std::out_of_range("file sequence: index " + std::to_string(k) +
                                    " outside loaded range");
        return values_[static_cast<std::size_t>(k - base_)];
    }
    std::int64_t lo() const noexcept override { return base_; }
    std::int64_t hi() const noexcept override {
        return base_ + static_cast<std::int64_t>(values_.size()) - 1;
    }
    std::string describe() const override { return "file:" + name_; }
    std::int64_t base_;
    std::vector<std::int64_t> values_;
    std::string name_;
};

}  // namespace

BiSequence BiSequence::paperfolding() {
    return BiSequence(std::make_shared<PaperfoldingImpl>());
}

BiSequence BiSequence::level(int s) {
    return BiSequence(std::make_shared<LevelImpl>(s));
}

BiSequence BiSequence::star(BiSequence inner) {
    return BiSequence(std::make_shared<StarImpl>(std::move(inner), false));
}

BiSequence BiSequence::doublestar(BiSequence inner) {
    return BiSequence(std::make_shared<StarImpl>(std::move(inner), true));
}

BiSequence BiSequence::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("sequence file: cannot open " + path.string());
    std::string header, word;
    std::int64_t base = 0;
    if (!std::getline(in, header)) throw std::runtime_error("sequence file: empty file");
    {
        std::istringstream hs(header);
        if (!(hs >> word) || word != "base_index" || !(hs >> base))
            throw std::runtime_error("sequence file: first line must be 'base_index <k0>'");
    }
    std::vector<std::int64_t> values;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::int64_t v;
        if (!(ls >> v))
            throw std::runtime_error("sequence file: parse error at line " + std::to_string(lineno));
        values.push_back(v);
    }
    if (values.empty()) throw std::runtime_error("sequence file: no values");
    return BiSequence(std::make_shared<FileImpl>(base, std::move(values), path.filename().string()));
}

std::int64_t BiSequence::at(std::int64_t k) const { return impl_->at(k); }
std::int64_t BiSequence::domain_min() const noexcept { return impl_->lo(); }
std::int64_t BiSequence::domain_max() const noexcept { return impl_->hi(); }
std::string BiSequence::describe() const { return impl_->describe(); }

std::vector<std::int64_t> BiSequence::materialize(std::int64_t lo, std::int64_t hi) const {
    if (hi < lo) return {};
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t k = lo; k <= hi; ++k) out.push_back(at(k));
    return out;
}

Laurent series_slice(const BiSequence& seq, const PrimeField& f, std::int64_t m, int K) {
    if (K < 1) throw std::invalid_argument("series_slice: K must be >= 1");
    std::vector<std::uint64_t> c;
    c.reserve(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) c.push_back(f.from_int(seq.at(k + m - 1)));
    return Laurent(f, 1, K, std::move(c));
}

}  // namespace nw
