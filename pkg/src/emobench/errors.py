"""Exception types shared across the pipeline modules."""


class EmobenchError(Exception):
    """Base class for all pipeline errors."""


# dataprep
class LexiconMissing(EmobenchError):
    pass


class InsufficientPool(EmobenchError):
    pass


class AllZeroWeights(EmobenchError):
    pass


class DegenerateMetric(EmobenchError):
    pass


class TooFewRecords(EmobenchError):
    pass


# annostore
class InfeasiblePlan(EmobenchError):
    pass


class NotAssigned(EmobenchError):
    pass


class ScaleViolation(EmobenchError):
    pass


class AlreadyFinal(EmobenchError):
    pass


class UnknownAnnotator(EmobenchError):
    pass


class NoRatings(EmobenchError):
    pass


# reliability
class DegenerateVariance(EmobenchError):
    pass


# fewshot
class DegenerateCentroid(EmobenchError):
    pass


class NotEnoughCandidates(EmobenchError):
    pass


class BadK(EmobenchError):
    pass


class TemplateMissing(EmobenchError):
    pass


class ProviderError(EmobenchError):
    pass


# llmrun
class UnknownModel(EmobenchError):
    pass


# evaluation
class DegenerateInput(EmobenchError):
    pass


class NoData(EmobenchError):
    pass


class MissingK(EmobenchError):
    pass


class WrongFoldCount(EmobenchError):
    pass


class CoverageMismatch(EmobenchError):
    pass


# cli / pipeline
class ConfigError(EmobenchError):
    pass


class MissingUpstream(EmobenchError):
    pass
