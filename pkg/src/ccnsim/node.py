"""Content router model: LRU content store, PIT, and per-node traffic counters."""

from __future__ import annotations

import enum
from collections import OrderedDict
from dataclasses import dataclass, field


class Action(enum.Enum):
    RETURN_DATA = "return-data"
    AGGREGATE = "aggregate"
    FORWARD = "forward"


class MalformedPacket(ValueError):
    pass


class ContentStore:
    """Fixed-capacity LRU set of content ids."""

    __slots__ = ("capacity", "_items", "evictions")

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError(f"cache capacity must be >= 1, got {capacity}")
        self.capacity = capacity
        self._items: OrderedDict[int, None] = OrderedDict()
        self.evictions = 0

    def __len__(self):
        return len(self._items)

    def __contains__(self, content):
        return content in self._items

    def __iter__(self):
        """Least recently used first."""
        return iter(self._items)

    def lookup(self, content) -> bool:
        """Membership test that refreshes recency on a hit."""
        if content in self._items:
            self._items.move_to_end(content)
            return True
        return False

    def insert(self, content):
        """Insert or refresh ``content``; return the evicted id, if any."""
        items = self._items
        if content in items:
            items.move_to_end(content)
            return None
        items[content] = None
        if len(items) > self.capacity:
            self.evictions += 1
            return items.popitem(last=False)[0]
        return None


@dataclass(eq=False)
class Interest:
    interest_id: int
    content: int
    consumer: int
    issue_time: float
    path_trace: list = field(default_factory=list)

    @property
    def hop_count(self) -> int:
        return len(self.path_trace) - 1


@dataclass(eq=False)
class Data:
    content: int
    interest_id: int
    from_cache: bool
    source: int
    path_trace: list = field(default_factory=list)

    @property
    def hop_count(self) -> int:
        return len(self.path_trace) - 1

    def copy(self) -> "Data":
        return Data(self.content, self.interest_id, self.from_cache, self.source, list(self.path_trace))


@dataclass(eq=False)
class PendingRequest:
    """One PIT face record. ``face`` is the downstream router, or None for a local consumer."""

    interest: Interest
    face: int | None
    arrival_time: float


class PitTable:
    def __init__(self):
        self._entries: dict[int, list[PendingRequest]] = {}

    def __len__(self):
        return len(self._entries)

    def __contains__(self, content):
        return content in self._entries

    def pending(self, content) -> list[PendingRequest]:
        return self._entries.get(content, [])

    def add(self, content, record: PendingRequest) -> None:
        self._entries.setdefault(content, []).append(record)

    def pop_all(self, content) -> list[PendingRequest]:
        return self._entries.pop(content, [])

    def pop_interest(self, content, interest_id) -> list[PendingRequest]:
        records = self._entries.get(content)
        if not records:
            return []
        for i, rec in enumerate(records):
            if rec.interest.interest_id == interest_id:
                del records[i]
                if not records:
                    del self._entries[content]
                return [rec]
        return []

    def contents(self):
        return list(self._entries)


class NodeState:
    """Mutable per-router state owned by a single simulation run.

    ``path_count`` is the number of interests this router forwarded
    upstream; ``request_counts[k]`` counts forwarded interests for content
    ``k``. Both only move on a cache miss with no pending PIT entry.
    """

    def __init__(self, node_id: int, cache_capacity: int, serves_origin: bool = False):
        self.node_id = node_id
        self.content_store = ContentStore(cache_capacity)
        self.pit = PitTable()
        self.serves_origin = serves_origin
        self.path_count = 0
        self.request_counts: dict[int, int] = {}
        self.max_request_count = 0
        self.orphan_data = 0
        self.peak_occupancy = 0

    def count_request(self, content) -> None:
        self.path_count += 1
        f = self.request_counts.get(content, 0) + 1
        self.request_counts[content] = f
        if f > self.max_request_count:
            self.max_request_count = f

    def __repr__(self):
        return (f"NodeState(id={self.node_id}, cached={len(self.content_store)}, "
                f"pit={len(self.pit)}, c_S={self.path_count})")


def connectivity(node: NodeState, network_max: int) -> float:
    if network_max <= 0:
        return 0.0
    return node.path_count / network_max


def popularity(node: NodeState, content) -> float:
    if node.max_request_count == 0:
        return 0.0
    return node.request_counts.get(content, 0) / node.max_request_count


def process_interest(node: NodeState, packet: Interest, face, now: float, aggregate: bool = True) -> Action:
    """Handle an interest that has just arrived at ``node``.

    The caller must already have appended ``node`` to the packet trace.
    The origin's attachment router never answers from its own store; the
    origin answers there instead, after the usual miss bookkeeping.
    """
    trace = packet.path_trace
    if not trace or trace[-1] != node.node_id:
        raise MalformedPacket(f"interest {packet.interest_id}: trace {trace!r} does not end at node {node.node_id}")
    content = packet.content
    if not node.serves_origin and node.content_store.lookup(content):
        return Action.RETURN_DATA
    pit = node.pit
    record = PendingRequest(packet, face, now)
    if aggregate and content in pit:
        pit.add(content, record)
        return Action.AGGREGATE
    node.count_request(content)
    pit.add(content, record)
    return Action.FORWARD


def process_data(node: NodeState, packet: Data, cache: bool, aggregate: bool = True) -> list[PendingRequest]:
    """Consume the PIT entry for ``packet`` and return the faces to deliver to.

    With ``cache`` set the content is admitted (LRU eviction when full).
    Data matching no PIT entry is dropped and tallied in ``orphan_data``.
    """
    if aggregate:
        records = node.pit.pop_all(packet.content)
    else:
        records = node.pit.pop_interest(packet.content, packet.interest_id)
    if not records:
        node.orphan_data += 1
        return []
    if cache and not node.serves_origin:
        cs = node.content_store
        cs.insert(packet.content)
        if len(cs) > node.peak_occupancy:
            node.peak_occupancy = len(cs)
    return records
