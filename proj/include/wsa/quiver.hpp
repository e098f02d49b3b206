#pragma once

#include <map>
#include <string>
#include <vector>

#include "error.hpp"

namespace wsa {

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A path is a sequence of arrow ids read left to right.
using Word = std::vector<int>;

class Quiver {
public:
    Quiver() = default;

    int add_vertex(const std::string& name) {
        require(!vertex_ids_.count(name), ErrorCode::InvalidArgument, "duplicate vertex '" + name + "'");
        vertex_ids_[name] = static_cast<int>(vertices_.size());
        vertices_.push_back(name);
        out_.emplace_back();
        in_.emplace_back();
        return static_cast<int>(vertices_.size()) - 1;
    }

    int add_arrow(const std::string& name, int source, int target) {
        require(!arrow_ids_.count(name), ErrorCode::InvalidArgument, "duplicate arrow '" + name + "'");
        require(source >= 0 && source < num_vertices() && target >= 0 && target < num_vertices(),
                ErrorCode::InvalidArgument, "arrow '" + name + "' has an undeclared endpoint");
        int id = static_cast<int>(arrows_.size());
        arrow_ids_[name] = id;
        arrows_.push_back({name, source, target});
        out_[source].push_back(id);
        in_[target].push_back(id);
        return id;
    }

    int add_arrow(const std::string& name, const std::string& source, const std::string& target) {
        return add_arrow(name, vertex(source), vertex(target));
    }

    int num_vertices() const noexcept { return static_cast<int>(vertices_.size()); }
    int num_arrows() const noexcept { return static_cast<int>(arrows_.size()); }

    const std::string& vertex_name(int v) const { return vertices_.at(v); }
    const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

    bool has_vertex(const std::string& name) const { return vertex_ids_.count(name) > 0; }
    bool has_arrow(const std::string& name) const { return arrow_ids_.count(name) > 0; }

    int vertex(const std::string& name) const {
        auto it = vertex_ids_.find(name);
        require(it != vertex_ids_.end(), ErrorCode::InvalidArgument, "unknown vertex '" + name + "'");
        return it->second;
    }
    int arrow_id(const std::string& name) const {
        auto it = arrow_ids_.find(name);
        require(it != arrow_ids_.end(), ErrorCode::InvalidArgument, "unknown arrow '" + name + "'");
        return it->second;
    }

    const std::vector<int>& out_arrows(int v) const { return out_.at(v); }
    const std::vector<int>& in_arrows(int v) const { return in_.at(v); }

    bool is_path(const Word& w) const {
        for (std::size_t i = 1; i < w.size(); ++i)
            if (arrows_[w[i - 1]].target != arrows_[w[i]].source) return false;
        return true;
    }

    Word parse_word(const std::vector<std::string>& names) const {
        Word w;
        for (const auto& n : names) w.push_back(arrow_id(n));
        require(is_path(w), ErrorCode::InvalidArgument, "arrows do not compose to a path");
        return w;
    }

    std::string word_string(const Word& w, const std::string& sep = " ") const {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += sep;
            s += arrows_[w[i]].name;
        }
        return s;
    }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_ids_;
    std::map<std::string, int> arrow_ids_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

} // namespace wsa
