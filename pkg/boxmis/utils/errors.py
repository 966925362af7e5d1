# -*- encoding: utf-8 -*-


class BoxmisError(Exception):
    """ boxmis が送出する例外の基底クラス """


class DimensionError(BoxmisError, ValueError):
    """ Raised when two boxes (or a box and an arrangement) disagree on dimension. """


class PreconditionError(BoxmisError, ValueError):
    """ Raised when an operation is called outside of its domain. """


class ConstructionError(BoxmisError):
    """ An adversary produced geometry that failed its own validation.

    This always indicates a bug in the generator and is never caught internally.
    """


class CheckpointError(BoxmisError):
    pass


class GoldenMismatch(BoxmisError):

    def __init__(self, table_id, cells):
        self.table_id = table_id
        self.cells = cells
        lines = ["%s: %d cell(s) out of tolerance" % (table_id, len(cells))]
        for cell in cells:
            lines.append("  row %s, column %s: expected %s, got %s" % cell)
        super(GoldenMismatch, self).__init__("\n".join(lines))
