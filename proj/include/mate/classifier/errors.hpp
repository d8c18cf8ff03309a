#pragma once

#include <stdexcept>

namespace mate::classifier {

class ClassifierError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyCorpus : public ClassifierError {
 public:
  EmptyCorpus() : ClassifierError("cannot fit TF-IDF on an empty corpus") {}
};

class DegenerateLabels : public ClassifierError {
 public:
  DegenerateLabels() : ClassifierError("training data needs at least two distinct labels") {}
};

class DimensionMismatch : public ClassifierError {
 public:
  using ClassifierError::ClassifierError;
};

class EmptyTrainingSet : public ClassifierError {
 public:
  EmptyTrainingSet() : ClassifierError("k-NN index has no training examples") {}
};

class KTooLarge : public ClassifierError {
 public:
  using ClassifierError::ClassifierError;
};

class InvalidFraction : public ClassifierError {
 public:
  using ClassifierError::ClassifierError;
};

class ModelFormatError : public ClassifierError {
 public:
  using ClassifierError::ClassifierError;
};

}  // namespace mate::classifier
