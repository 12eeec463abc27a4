"""Exception hierarchy for union-closed family operations."""


class FamilyError(ValueError):
    """Base class for invalid input to a family operation."""


class DuplicateMember(FamilyError):
    def __init__(self, member):
        self.member = member
        super().__init__(f"duplicate member {member!r}")


class ElementOutOfRange(FamilyError):
    def __init__(self, element, ground_size):
        self.element = element
        self.ground_size = ground_size
        super().__init__(f"element {element} outside 1..{ground_size}")


class NotAMember(FamilyError):
    pass


class ElementNotInUnion(FamilyError):
    pass


class NotRedundant(FamilyError):
    pass


class NotUnionClosed(FamilyError):
    pass


class SourceNotUnionClosed(NotUnionClosed):
    pass


class NotAHomomorphism(FamilyError):
    pass


class NotAnIsomorphism(FamilyError):
    pass


class NotPure(FamilyError):
    def __init__(self, side):
        self.side = side
        super().__init__(f"{side} family is not pure")


class ImageNotInTarget(FamilyError):
    def __init__(self, member, image):
        self.member = member
        self.image = image
        super().__init__(f"image of member {member!r} is {image!r}, not a target member")


class UnionMismatch(FamilyError):
    pass


class UnionTooLarge(FamilyError):
    pass


class GroundTooLarge(FamilyError):
    pass


class NoUniqueBottom(FamilyError):
    pass


class NoNonemptyMember(FamilyError):
    pass


class InternalContradiction(RuntimeError):
    """A proven invariant failed. This is a bug in the library, never bad input."""
