#pragma once

#include <cstddef>
#include <vector>

#include "pjohnson/context.hpp"
#include "pjohnson/word.hpp"

namespace pjohnson {

// Endomorphism of the free group on x_1..x_r given by the images of the
// generators. Images may only mention x_1..x_r.
class GroupEndo {
 public:
  static GroupEndo identity(const GroupContext& ctx);
  // Inn(x): g -> x g x^-1
  static GroupEndo inner(const GroupContext& ctx, const Word& x);
  static GroupEndo from_images(const GroupContext& ctx, std::vector<Word> images);

  const GroupContext& context() const { return ctx_; }
  int rank() const { return ctx_.rank; }
  // 1-based.
  const Word& image(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<Word>& images() const { return images_; }
  std::size_t max_image_size() const;

  friend bool operator==(const GroupEndo&, const GroupEndo&) = default;

 private:
  GroupEndo(const GroupContext& ctx, std::vector<Word> images)
      : ctx_(ctx), images_(std::move(images)) {}

  GroupContext ctx_;
  std::vector<Word> images_;
};

Word apply_endo(const GroupEndo& phi, const Word& w, std::size_t guard = kDefaultWordGuard);

}  // namespace pjohnson
