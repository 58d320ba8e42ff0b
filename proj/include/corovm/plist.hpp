#ifndef COROVM_PLIST_HPP
#define COROVM_PLIST_HPP

#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <utility>
#include <vector>

namespace corovm {

// Immutable singly linked list with shared tails. cons is O(1) and never
// touches the list it extends, so snapshots taken by the machines stay valid.
template <class T>
class PList {
  struct Node;

 public:
  using value_type = T;

  PList() = default;

  PList(std::initializer_list<T> items) {
    std::vector<T> tmp(items);
    PList acc;
    for (auto it = tmp.rbegin(); it != tmp.rend(); ++it) acc = acc.cons(*it);
    *this = std::move(acc);
  }

  PList(const PList&) = default;
  PList(PList&&) noexcept = default;
  PList& operator=(PList other) noexcept {
    node_.swap(other.node_);
    return *this;
  }

  // Unlinks uniquely owned nodes one by one; the default destructor would
  // recurse once per element.
  ~PList() {
    while (node_ && node_.use_count() == 1) {
      auto next = std::move(const_cast<Node&>(*node_).tail);
      node_ = std::move(next);
    }
  }

  [[nodiscard]] PList cons(T head) const {
    PList out;
    out.node_ = std::make_shared<const Node>(Node{std::move(head), node_, size() + 1});
    return out;
  }

  [[nodiscard]] bool empty() const noexcept { return !node_; }
  [[nodiscard]] std::size_t size() const noexcept { return node_ ? node_->size : 0; }

  const T& front() const { return node_->head; }
  PList tail() const { return node_ ? PList(node_->tail) : PList{}; }

  // Positional lookup, 0 = front. Returns nullptr when out of range.
  const T* at(std::size_t index) const noexcept {
    if (index >= size()) return nullptr;
    const Node* n = node_.get();
    while (index-- > 0) n = n->tail.get();
    return &n->head;
  }

  // Node identity; two lists with the same identity are the same list.
  const void* identity() const noexcept { return node_.get(); }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using pointer = const T*;
    using reference = const T&;

    const_iterator() = default;
    explicit const_iterator(const Node* n) : node_(n) {}
    reference operator*() const { return node_->head; }
    pointer operator->() const { return &node_->head; }
    const_iterator& operator++() {
      node_ = node_->tail.get();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const const_iterator&, const const_iterator&) = default;

   private:
    const Node* node_ = nullptr;
  };

  const_iterator begin() const noexcept { return const_iterator(node_.get()); }
  const_iterator end() const noexcept { return const_iterator(); }

  std::vector<T> to_vector() const { return std::vector<T>(begin(), end()); }

  // Element-wise equality with a shortcut for shared suffixes.
  friend bool operator==(const PList& a, const PList& b) {
    if (a.size() != b.size()) return false;
    const Node* x = a.node_.get();
    const Node* y = b.node_.get();
    while (x != y) {
      if (!(x->head == y->head)) return false;
      x = x->tail.get();
      y = y->tail.get();
    }
    return true;
  }

 private:
  struct Node {
    T head;
    std::shared_ptr<const Node> tail;
    std::size_t size;
  };

  explicit PList(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Maps f over a list, preserving order.
template <class T, class F>
auto map_list(const PList<T>& list, F&& f) -> PList<decltype(f(std::declval<const T&>()))> {
  using U = decltype(f(std::declval<const T&>()));
  std::vector<U> mapped;
  mapped.reserve(list.size());
  for (const auto& item : list) mapped.push_back(f(item));
  PList<U> out;
  for (auto it = mapped.rbegin(); it != mapped.rend(); ++it) out = out.cons(std::move(*it));
  return out;
}

}  // namespace corovm

#endif
